from . import syntax
from . import model
from . import coherence
from . import iso
from . import theories
