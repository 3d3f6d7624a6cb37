from .prove import (DEFAULT_CFG, PROBLEM_EXTENSIONS, input_format,
                    load_config, load_formula, load_input, prove)

__all__ = [
    'DEFAULT_CFG', 'PROBLEM_EXTENSIONS', 'input_format', 'load_config',
    'load_formula', 'load_input', 'prove'
]
