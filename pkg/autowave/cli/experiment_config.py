import numpy as np
from os import path
from typing import Dict, List, Optional, Tuple

from autoconf import conf

from autowave.geometry.triangle import Triangle

from autowave import exc

EIGENMODE = "eigenmode"
RANDOM = "random"
BUMP = "bump"

INITIAL_DATA = (EIGENMODE, RANDOM, BUMP)

LIST_KEYS = ("vertex", "level", "t", "mode", "n", "coefficient")

SCALAR_KEYS = (
    "side",
    "initial_data",
    "mode_m",
    "mode_n",
    "seed",
    "cfl_safety",
    "sample_stride",
    "bump_centre",
    "bump_radius",
    "bump_amplitude",
    "length",
    "random_modes",
    "trials",
    "output",
)

DEFAULT_VERTICES = [(0.0, 0.0), (np.pi, 0.0), (np.pi, np.pi)]


class Entry:
    def __init__(self, key: str, value: str, line: int, column: int):
        """
        One `key = value` line of an experiment config, with the (1-based) position of its value.
        """
        self.key = key
        self.value = value
        self.line = line
        self.column = column


class ExperimentConfig:
    def __init__(
        self,
        vertices: Optional[List[Tuple[float, float]]] = None,
        side: str = "A",
        initial_data: str = RANDOM,
        modes: Optional[List[Tuple[int, int]]] = None,
        seed: int = 1,
        levels: Optional[List[int]] = None,
        T_list: Optional[List[Tuple[float, bool]]] = None,
        cfl_safety: Optional[float] = None,
        sample_stride: Optional[int] = None,
        bump_centre: Optional[Tuple[float, float]] = None,
        bump_radius: float = 0.5,
        bump_amplitude: float = 1.0,
        n_list: Optional[List[int]] = None,
        coefficients: Optional[List[Tuple[int, float, float]]] = None,
        length: float = 1.0,
        random_modes: int = 5,
        trials: int = 100,
        output: Optional[str] = None,
        source: str = "<config>",
    ):
        """
        The settings of a command line experiment, read from a flat `key = value` text file.

        Lines are `key = value`, `#` starts a comment and keys are case insensitive. Repeating a list key appends to
        its list, repeating any other key is an error. The keys are:

        - `vertex = x, y` (three times): the triangle, by default the right isosceles triangle `0 <= y <= x <= pi`.
        - `side`: the label of the side under study.
        - `initial_data`: `eigenmode`, `random` or `bump`.
        - `mode_m`, `mode_n`, or `mode = m, n` (listable): isosceles modes.
        - `seed`: the seed of random data.
        - `level` (listable): mesh levels.
        - `T` (listable): final times, a trailing `L` meaning a multiple of the longest side (`T = 5L`).
        - `cfl_safety`, `sample_stride`: leapfrog settings, defaulting to the `[timestepper]` config.
        - `bump_centre = x, y`, `bump_radius`, `bump_amplitude`: bump initial data.
        - `n` (listable): square mode wavenumbers.
        - `coefficient = k, a, b` (listable), `length`, `random_modes`: a 1D sine series, the number of random modes
          defaulting to the `[analytic] random_modes` config.
        - `trials`: the number of random fields of a Poincare check.
        - `output`: the output directory.
        """
        self.vertices = vertices or DEFAULT_VERTICES
        self.side = side
        self.initial_data = initial_data
        self.modes = modes or []
        self.seed = seed
        self.levels = levels or []
        self.T_list = T_list or []
        self.cfl_safety = cfl_safety
        self.sample_stride = sample_stride
        self.bump_centre = bump_centre
        self.bump_radius = bump_radius
        self.bump_amplitude = bump_amplitude
        self.n_list = n_list or []
        self.coefficients = coefficients or []
        self.length = length
        self.random_modes = random_modes
        self.trials = trials
        self.output = output
        self.source = source

    @classmethod
    def from_file(cls, file_path: str) -> "ExperimentConfig":

        if not path.isfile(file_path):
            raise exc.ConfigParse("config file not found", line=0, column=0, source=file_path)

        with open(file_path) as f:
            return cls.from_text(text=f.read(), source=file_path)

    @classmethod
    def from_text(cls, text: str, source: str = "<config>") -> "ExperimentConfig":
        """
        Parse the text of an experiment config.

        Raises
        ------
        exc.ConfigParse
            For a malformed line, an unknown or repeated key or an invalid value, pointing at its line and column.
        """
        entries = cls.entries_from(text=text, source=source)

        lists: Dict[str, List[Entry]] = {key: [] for key in LIST_KEYS}
        scalars: Dict[str, Entry] = {}

        for entry in entries:

            if entry.key in LIST_KEYS:
                lists[entry.key].append(entry)
            elif entry.key in SCALAR_KEYS:
                if entry.key in scalars:
                    raise exc.ConfigParse(
                        f"key {entry.key!r} is repeated (first given on line {scalars[entry.key].line})",
                        line=entry.line,
                        column=1,
                        source=source,
                    )
                scalars[entry.key] = entry
            else:
                raise exc.ConfigParse(
                    f"unknown key {entry.key!r}", line=entry.line, column=1, source=source
                )

        def scalar(key, parse, default):
            if key not in scalars:
                return default
            return parse(scalars[key], source)

        vertices = [parse_pair(entry, source) for entry in lists["vertex"]]

        if vertices and len(vertices) != 3:
            last = lists["vertex"][-1]
            raise exc.ConfigParse(
                f"a triangle needs exactly three vertices, got {len(vertices)}",
                line=last.line,
                column=last.column,
                source=source,
            )

        modes = [
            tuple(int(value) for value in parse_integers(entry, source, count=2))
            for entry in lists["mode"]
        ]

        if "mode_m" in scalars or "mode_n" in scalars:
            modes.insert(
                0,
                (
                    scalar("mode_m", parse_integer, 1),
                    scalar("mode_n", parse_integer, 2),
                ),
            )

        initial_data = scalar("initial_data", parse_string, RANDOM).lower()

        if initial_data not in INITIAL_DATA:
            entry = scalars["initial_data"]
            raise exc.ConfigParse(
                f"initial_data must be one of {', '.join(INITIAL_DATA)}, got {entry.value!r}",
                line=entry.line,
                column=entry.column,
                source=source,
            )

        max_level = int(conf.instance["general"]["mesh"]["max_level"])

        levels = []

        for entry in lists["level"]:
            level = parse_integer(entry, source)
            if level < 0 or level > max_level:
                raise exc.ConfigParse(
                    f"level must lie between 0 and {max_level}, got {level}",
                    line=entry.line,
                    column=entry.column,
                    source=source,
                )
            levels.append(level)

        T_list = [parse_time(entry, source) for entry in lists["t"]]

        config = ExperimentConfig(
            vertices=vertices or None,
            side=scalar("side", parse_string, "A"),
            initial_data=initial_data,
            modes=modes,
            seed=scalar("seed", parse_integer, 1),
            levels=levels,
            T_list=T_list,
            cfl_safety=scalar("cfl_safety", parse_float, None),
            sample_stride=scalar("sample_stride", parse_integer, None),
            bump_centre=scalar("bump_centre", parse_pair, None),
            bump_radius=scalar("bump_radius", parse_float, 0.5),
            bump_amplitude=scalar("bump_amplitude", parse_float, 1.0),
            n_list=[parse_integer(entry, source) for entry in lists["n"]],
            coefficients=[parse_coefficient(entry, source) for entry in lists["coefficient"]],
            length=scalar("length", parse_float, 1.0),
            random_modes=scalar(
                "random_modes",
                parse_integer,
                int(conf.instance["general"]["analytic"]["random_modes"]),
            ),
            trials=scalar("trials", parse_integer, 100),
            output=scalar("output", parse_string, None),
            source=source,
        )

        try:
            triangle = config.triangle
        except exc.GeometryException as e:
            entry = lists["vertex"][0] if lists["vertex"] else Entry("vertex", "", 0, 0)
            raise exc.ConfigParse(str(e), line=entry.line, column=entry.column, source=source)

        if "side" in scalars and config.side not in triangle.labels:
            entry = scalars["side"]
            raise exc.ConfigParse(
                f"side must be one of {', '.join(triangle.labels)}, got {entry.value!r}",
                line=entry.line,
                column=entry.column,
                source=source,
            )

        return config

    @staticmethod
    def entries_from(text: str, source: str) -> List[Entry]:

        entries = []

        for line_index, raw_line in enumerate(text.splitlines(), start=1):

            line = raw_line.split("#", 1)[0]

            if not line.strip():
                continue

            if "=" not in line:
                column = len(line) - len(line.lstrip()) + 1
                raise exc.ConfigParse(
                    "expected a 'key = value' line", line=line_index, column=column, source=source
                )

            key, value = line.split("=", 1)

            if not key.strip():
                raise exc.ConfigParse(
                    "missing key before '='", line=line_index, column=1, source=source
                )

            value_column = len(key) + 2 + (len(value) - len(value.lstrip()))

            if not value.strip():
                raise exc.ConfigParse(
                    f"missing value for key {key.strip()!r}",
                    line=line_index,
                    column=value_column,
                    source=source,
                )

            entries.append(
                Entry(
                    key=key.strip().lower(),
                    value=value.strip(),
                    line=line_index,
                    column=value_column,
                )
            )

        return entries

    @property
    def triangle(self) -> Triangle:
        return Triangle(vertices=self.vertices)

    def T_values_from(self, triangle: Optional[Triangle] = None) -> List[float]:
        """
        The final times, with multiples of the longest side resolved on the config's triangle.
        """
        triangle = triangle or self.triangle

        return [
            value * triangle.longest_side if in_longest_sides else value
            for value, in_longest_sides in self.T_list
        ]


def parse_string(entry: Entry, source: str) -> str:
    return entry.value


def parse_float(entry: Entry, source: str) -> float:
    try:
        value = float(entry.value)
    except ValueError:
        raise exc.ConfigParse(
            f"expected a number, got {entry.value!r}",
            line=entry.line,
            column=entry.column,
            source=source,
        )

    if not np.isfinite(value):
        raise exc.ConfigParse(
            f"expected a finite number, got {entry.value!r}",
            line=entry.line,
            column=entry.column,
            source=source,
        )

    return value


def parse_integer(entry: Entry, source: str) -> int:
    try:
        return int(entry.value)
    except ValueError:
        raise exc.ConfigParse(
            f"expected an integer, got {entry.value!r}",
            line=entry.line,
            column=entry.column,
            source=source,
        )


def split_values(entry: Entry, source: str, count: int) -> List[Entry]:
    """
    Split a comma separated value into `count` entries, each keeping the column it starts at.
    """
    parts = entry.value.split(",")

    if len(parts) != count:
        raise exc.ConfigParse(
            f"expected {count} comma separated values, got {entry.value!r}",
            line=entry.line,
            column=entry.column,
            source=source,
        )

    values = []
    offset = 0

    for part in parts:
        leading = len(part) - len(part.lstrip())
        values.append(
            Entry(
                key=entry.key,
                value=part.strip(),
                line=entry.line,
                column=entry.column + offset + leading,
            )
        )
        offset += len(part) + 1

    return values


def parse_pair(entry: Entry, source: str) -> Tuple[float, float]:
    x, y = split_values(entry, source, count=2)
    return parse_float(x, source), parse_float(y, source)


def parse_integers(entry: Entry, source: str, count: int) -> List[int]:
    return [parse_integer(value, source) for value in split_values(entry, source, count=count)]


def parse_coefficient(entry: Entry, source: str) -> Tuple[int, float, float]:
    k, a, b = split_values(entry, source, count=3)

    mode = parse_integer(k, source)

    if mode < 1:
        raise exc.ConfigParse(
            f"sine series modes start at 1, got {mode}",
            line=k.line,
            column=k.column,
            source=source,
        )

    return mode, parse_float(a, source), parse_float(b, source)


def parse_time(entry: Entry, source: str) -> Tuple[float, bool]:
    """
    A final time, either a number or a multiple of the longest side written with a trailing `L`.
    """
    text = entry.value
    in_longest_sides = text[-1:] in ("L", "l")

    number = Entry(
        key=entry.key,
        value=text[:-1].strip() if in_longest_sides else text,
        line=entry.line,
        column=entry.column,
    )

    value = parse_float(number, source)

    if not value > 0.0:
        raise exc.ConfigParse(
            f"T must be positive, got {entry.value!r}",
            line=entry.line,
            column=entry.column,
            source=source,
        )

    return value, in_longest_sides
