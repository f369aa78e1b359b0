from hypothesis import settings

# fully reproducible property tests
settings.register_profile("deterministic", derandomize=True, deadline=None)
settings.load_profile("deterministic")
