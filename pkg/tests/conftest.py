from hypothesis import HealthCheck, settings

# exact-arithmetic cases have long tails; wall-clock deadlines misfire
settings.register_profile(
    "exact",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")
