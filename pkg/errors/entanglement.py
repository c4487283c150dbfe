class NotHermitianError(Exception):
    pass


class EigenSolverError(Exception):
    pass
