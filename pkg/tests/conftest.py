from hypothesis import settings

settings.register_profile("linkdomain", deadline=None)
settings.load_profile("linkdomain")
