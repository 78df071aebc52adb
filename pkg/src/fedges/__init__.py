"""fedges: federated Bayesian network structure learning.

Clients run edge-limited greedy equivalence search on private horizontal
partitions, the server fuses the resulting DAG structures, and the loop
repeats until the client DAGs stop changing.
"""

from fedges.config import Settings
from fedges.models import Variable, VariableSet

__version__ = "1.0.0"
__all__ = ["Settings", "Variable", "VariableSet", "__version__"]
