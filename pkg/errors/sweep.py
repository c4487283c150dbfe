class SweepConfigError(Exception):
    pass


class CrossoverNotFoundError(Exception):
    pass


class ThresholdNotFoundError(Exception):
    pass


class EmptySweepError(Exception):
    pass
