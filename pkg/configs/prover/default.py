# 1. engine
engine = dict(
    typename='GivenClauseEngine',
    timeout=100.0,
    sigma_rule=True,
    seed=None,
    max_clauses=None)

# 2. hooks
hooks = [
    dict(typename='LoggerHook', interval=500),
]

# 3. model search
search = dict(max_states=3, max_moves=2)

# 4. benchmark
bench = dict(timeout=100.0, jobs=1)

# 5. misc
log_level = 'INFO'
