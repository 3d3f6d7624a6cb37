#!/usr/bin/env python
from setuptools import find_packages, setup


def readme():
    with open('README.md', encoding='utf-8') as f:
        content = f.read()
    return content


def parse_requirements(fname='requirements.txt', with_version=True):
    """Parse the package dependencies listed in a requirements file but strips
    specific versioning information.

    Args:
        fname (str): path to requirements file
        with_version (bool, default=False): if True include version specs

    Returns:
        List[str]: list of requirements items
    """
    import re
    from os.path import exists

    def parse_line(line):
        if line.startswith('-r '):
            target = line.split(' ')[1]
            for info in parse_require_file(target):
                yield info
        else:
            info = {'line': line}
            pat = '(' + '|'.join(['>=', '==', '>']) + ')'
            parts = [p.strip() for p in re.split(pat, line, maxsplit=1)]
            info['package'] = parts[0]
            if len(parts) > 1:
                info['version'] = tuple(parts[1:])
            yield info

    def parse_require_file(fpath):
        with open(fpath, 'r') as f:
            for line in f.readlines():
                line = line.strip()
                if line and not line.startswith('#'):
                    for info in parse_line(line):
                        yield info

    packages = []
    if exists(fname):
        for info in parse_require_file(fname):
            parts = [info['package']]
            if with_version and 'version' in info:
                parts.extend(info['version'])
            packages.append(''.join(parts))
    return packages


if __name__ == '__main__':
    setup(
        name='vedacl',
        version='1.0.0',
        description='Resolution prover for Coalition Logic',
        long_description=readme(),
        long_description_content_type='text/markdown',
        classifiers=[
            'Programming Language :: Python :: 3',
            'Operating System :: OS Independent',
            'License :: OSI Approved :: Apache Software License',
        ],
        keywords='coalition logic, resolution, theorem proving',
        packages=find_packages(include=('vedacore', 'vedacore.*', 'vedacl',
                                        'vedacl.*')),
        python_requires='>=3.7',
        setup_requires=parse_requirements('requirements/build.txt'),
        install_requires=parse_requirements('requirements/runtime.txt'),
        extras_require={
            'tests': parse_requirements('requirements/tests.txt'),
        },
        entry_points={'console_scripts': ['vedacl=vedacl.cli:run']},
        zip_safe=False)
