import matplotlib

from autoconf import conf


def set_backend():
    """
    Use the matplotlib backend of the `[general] backend` visualization config value, unless it is `default`.
    """
    backend = conf.instance["visualize"]["general"]["general"]["backend"]

    if backend != "default":
        matplotlib.use(backend)


set_backend()

import os
from os import path
from matplotlib import pyplot as plt

from autowave import exc


class Output:
    def __init__(self, output_path: str, format: str = None):
        """
        Where and in which format the figures of a plotter are written. Figures are only ever saved to files.
        """
        self.output_path = output_path
        self.format = format or conf.instance["visualize"]["general"]["trajectory"]["format"]

    def to_figure(self, filename: str):

        if not path.exists(self.output_path):
            os.makedirs(self.output_path)

        file_path = path.join(self.output_path, f"{filename}.{self.format}")

        plt.savefig(
            file_path,
            dpi=int(conf.instance["visualize"]["general"]["general"]["dpi"]),
            bbox_inches="tight",
        )
        plt.close()

        return file_path


class AbstractPlotter:
    def __init__(self, output: Output):

        if output is None:
            raise exc.PlottingException("A plotter needs an output to write figures to")

        self.output = output

    def open_figure(self, number_subplots: int = 1):

        figsize = (
            float(conf.instance["visualize"]["general"]["trajectory"]["figsize_x"]),
            float(conf.instance["visualize"]["general"]["trajectory"]["figsize_y"]),
        )

        return plt.subplots(1, number_subplots, figsize=figsize, squeeze=False)
