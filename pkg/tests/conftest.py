from hypothesis import settings

# deterministic CI runs: fixed derivation seed, no per-example deadline
# (big-integer cases have wildly varying cost)
settings.register_profile("ci", deadline=None, derandomize=True)
settings.load_profile("ci")
