class MissingMagneticFieldError(Exception):
    pass


class InvalidRateMatrixError(Exception):
    pass


class SignCalibrationError(Exception):
    pass


class IntegrationError(Exception):
    pass
