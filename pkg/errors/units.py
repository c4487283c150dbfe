class UnsupportedDimensionError(Exception):
    pass


class DimensionMismatchError(Exception):
    pass
