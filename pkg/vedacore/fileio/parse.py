def list_from_file(filename, prefix='', offset=0, max_num=0, comment=None):
    """Load a text file and parse the content as a list of strings.

    Args:
        filename (str): Filename.
        prefix (str): The prefix to be inserted to the begining of each item.
        offset (int): The offset of lines.
        max_num (int): The maximum number of lines to be read,
            zeros and negatives mean no limitation.
        comment (str | None): Lines starting with this marker, and blank
            lines, are skipped when given.

    Returns:
        list[str]: A list of strings.
    """
    cnt = 0
    item_list = []
    with open(filename, 'r') as f:
        for _ in range(offset):
            f.readline()
        for line in f:
            if max_num > 0 and cnt >= max_num:
                break
            line = line.rstrip('\n')
            if comment is not None:
                stripped = line.strip()
                if not stripped or stripped.startswith(comment):
                    continue
            item_list.append(prefix + line)
            cnt += 1
    return item_list


def dict_from_file(filename, key_type=str, sep=None):
    """Load a text file and parse the content as a dict.

    Each line holds a key and a value split by ``sep`` (whitespace when
    ``None``). With whitespace splitting, lines of more than two columns
    map to a list. Blank lines are skipped.

    Args:
        filename(str): Filename.
        key_type(type): Type of the dict's keys.
        sep(str | None): Key/value separator.

    Returns:
        dict: The parsed contents.
    """
    mapping = {}
    with open(filename, 'r') as f:
        for line in f:
            line = line.rstrip('\n')
            if not line.strip():
                continue
            if sep is None:
                items = line.split()
                if len(items) < 2:
                    raise ValueError(f'malformed line in {filename}: {line}')
                val = items[1:] if len(items) > 2 else items[1]
            else:
                if sep not in line:
                    raise ValueError(f'malformed line in {filename}: {line}')
                key, val = line.split(sep, 1)
                items = [key.strip()]
                val = val.strip()
            mapping[key_type(items[0])] = val
    return mapping
