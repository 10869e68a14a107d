class GeometryException(Exception):
    pass


class CollinearVertices(GeometryException):
    pass


class InvalidSide(GeometryException):
    pass


class OutsideDomain(GeometryException):
    pass


class MeshException(Exception):
    pass


class LevelTooLarge(MeshException):
    pass


class DiscretizationException(Exception):
    pass


class NoInteriorNodes(DiscretizationException):
    pass


class NonFiniteSample(DiscretizationException):
    pass


class DimensionMismatch(DiscretizationException):
    pass


class TimestepperException(Exception):
    pass


class NumericalFailure(TimestepperException):
    pass


class ObservabilityException(Exception):
    pass


class ZeroEnergy(ObservabilityException):
    pass


class EmptyTrajectory(ObservabilityException):
    pass


class InvalidFluxRecovery(ObservabilityException):
    pass


class ConfigException(Exception):
    pass


class ConfigParse(ConfigException):
    def __init__(self, message: str, line: int = 0, column: int = 0, source: str = "<config>"):
        """
        Raised when an experiment config cannot be parsed, carrying the (1-based) line and column of the offending
        text so the CLI can point the user at it.
        """
        self.line = line
        self.column = column
        self.source = source

        super().__init__(f"{source}:{line}:{column}: {message}")


class TooFewLevels(ConfigException):
    pass


class EmptyModeList(ConfigException):
    pass


class InvalidTrials(ConfigException):
    pass


class PlottingException(Exception):
    pass
