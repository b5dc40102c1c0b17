import hypothesis

hypothesis.settings.register_profile("default", deadline=None)
hypothesis.settings.load_profile("default")
