class DegenerateGeometryError(Exception):
    pass
