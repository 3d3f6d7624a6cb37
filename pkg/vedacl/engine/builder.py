from vedacore.misc import build_from_cfg, registry


def build_engine(cfg, hooks=None, logger=None):
    default_args = dict(hooks=hooks, logger=logger)
    return build_from_cfg(cfg, registry, 'engine', default_args)
