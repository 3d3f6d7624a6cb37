# adapted from https://github.com/open-mmlab/mmcv
import inspect

from .utils import is_str


class Registry:
    """A two level registry mapping ``module_name -> class_name -> class``.

    Classes register themselves under a module name (``'engine'``,
    ``'hook'``) and are built back from config dicts carrying a
    ``typename`` key, see :func:`build_from_cfg`.
    """
    _instance = None

    def __init__(self):
        if not hasattr(self, '_module_dict'):
            self._module_dict = dict()

    def __new__(cls, *args, **kwargs):
        if cls._instance is None:
            cls._instance = object.__new__(cls)
        return cls._instance

    def __len__(self):
        return sum(len(dd) for dd in self._module_dict.values())

    def __contains__(self, key):
        module_name, _, cls_name = key.rpartition('.')
        dd = self._module_dict.get(module_name or 'module', {})
        return cls_name in dd

    def __repr__(self):
        return f'{self.__class__.__name__}(items={self._module_dict})'

    @property
    def module_dict(self):
        return self._module_dict

    def get(self, cls_name, module_name='module'):
        """Get the registry record.

        Args:
            cls_name (str): The class name in string format.
            module_name (str): The group the class was registered under.

        Returns:
            class: The corresponding class.
        """
        if module_name not in self._module_dict:
            raise KeyError(f'{module_name} is not in registry')
        dd = self._module_dict[module_name]
        if cls_name not in dd:
            raise KeyError(f'{cls_name} is not registered in {module_name}, '
                           f'available: {sorted(dd)}')
        return dd[cls_name]

    def _register_module(self, cls, module_name):
        if not inspect.isclass(cls):
            raise TypeError(f'module must be a class, but got {type(cls)}')

        cls_name = cls.__name__
        dd = self._module_dict.setdefault(module_name, dict())
        if cls_name in dd and dd[cls_name] is not cls:
            raise KeyError(f'{cls_name} is already registered '
                           f'in {module_name}')
        dd[cls_name] = cls

    def register_module(self, module_name='module'):

        def _register(cls):
            self._register_module(cls, module_name)
            return cls

        return _register


registry = Registry()


def build_from_cfg(cfg, registry, module_name='module', default_args=None):
    """Build an instance of the class named by ``cfg['typename']``.

    The remaining items of ``cfg`` are keyword arguments of the class;
    ``default_args`` fill in keys that ``cfg`` leaves out.
    """
    if not isinstance(cfg, dict):
        raise TypeError(f'cfg must be a dict, but got {type(cfg)}')
    if 'typename' not in cfg:
        raise KeyError(
            f'the cfg dict must contain the key "typename", but got {cfg}')
    if not isinstance(registry, Registry):
        raise TypeError('registry must be a registry object, '
                        f'but got {type(registry)}')
    if not (isinstance(default_args, dict) or default_args is None):
        raise TypeError('default_args must be a dict or None, '
                        f'but got {type(default_args)}')

    args = dict(cfg)
    obj_type = args.pop('typename')
    if not is_str(obj_type):
        raise TypeError(f'type must be a str, but got {type(obj_type)}')
    obj_cls = registry.get(obj_type, module_name)

    if default_args is not None:
        for name, value in default_args.items():
            args.setdefault(name, value)
    return obj_cls(**args)
