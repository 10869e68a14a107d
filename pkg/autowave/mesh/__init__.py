from autowave.mesh.mesh import BoundaryRestriction, Mesh
