__version__ = "0.1"
__version_info__ = (0, 1)
