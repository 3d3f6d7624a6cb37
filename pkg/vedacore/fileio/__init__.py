from .handlers import BaseFileHandler, JsonHandler, YamlHandler
from .io import dump, load
from .parse import dict_from_file, list_from_file

__all__ = [
    'load', 'dump', 'BaseFileHandler', 'JsonHandler', 'YamlHandler',
    'list_from_file', 'dict_from_file'
]
