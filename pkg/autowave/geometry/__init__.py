from autowave.geometry.triangle import Triangle
from autowave.geometry.side_frame import SideFrame
