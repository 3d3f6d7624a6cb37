# adapted from https://github.com/open-mmlab/mmcv
import os
import os.path as osp
import re


def check_file_exist(filename, msg_tmpl='file "{}" does not exist'):
    if not osp.isfile(filename):
        raise FileNotFoundError(msg_tmpl.format(filename))


def mkdir_or_exist(dir_name, mode=0o777):
    if dir_name == '':
        return
    dir_name = osp.expanduser(dir_name)
    os.makedirs(dir_name, mode=mode, exist_ok=True)


def is_str(x):
    """Whether the input is an string instance."""
    return isinstance(x, str)


def natural_key(text):
    """Sort key that orders ``problem_2`` before ``problem_10``."""
    return [int(tok) if tok.isdigit() else tok
            for tok in re.split(r'(\d+)', text)]
