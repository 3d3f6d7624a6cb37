# the bare calculus: no lifting of [] clauses to the grand coalition
_base_ = 'default.py'

engine = dict(sigma_rule=False)
