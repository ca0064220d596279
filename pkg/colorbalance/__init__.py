from . import graph, color_degree, switching, balance, families
from . import caterpillar, reduction, formats, cli
