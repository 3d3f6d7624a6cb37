from . import assembler, bench, engine, formula, misc, semantics, snf

__all__ = [
    'assembler', 'bench', 'engine', 'formula', 'misc', 'semantics', 'snf'
]
