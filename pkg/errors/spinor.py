class LorentzIndexError(Exception):
    pass


class SpinorAlgebraError(Exception):
    pass
