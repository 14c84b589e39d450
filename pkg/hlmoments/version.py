try:
    from importlib.metadata import PackageNotFoundError, version
    __version__ = version('hlmoments')
except PackageNotFoundError:
    __version__ = '0.1.0'
