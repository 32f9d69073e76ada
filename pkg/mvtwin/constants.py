"""
Constants used throughout the package.
"""

#: Package version reported in every JSON report
VERSION = "1.0.0"

#: Ambient group and its two kernels
GROUPS = ["mvt", "mvpt", "mvht"]

#: Quotient map defining each subgroup
MAP_BY_GROUP = {"mvpt": "phi", "mvht": "psi"}

#: Subgroup defined by each quotient map
GROUP_BY_MAP = {v: k for k, v in MAP_BY_GROUP.items()}

#: Quotient maps onto the symmetric group
MAPS = ["phi", "psi"]

#: The eight homogeneous 2-local representation families
FAMILIES = ["z1", "z2", "z3", "z4", "z5", "z6", "z7", "z8"]

#: Parameters each family needs
PARAMS_BY_FAMILY = {
    "z1": [],
    "z2": ["y"],
    "z3": ["y"],
    "z4": ["y"],
    "z5": ["y"],
    "z6": ["y", "z"],
    "z7": ["y", "z"],
    "z8": ["y", "a", "b"],
}

#: Families whose s-images are diagonal sign matrices
SIGN_FAMILIES = ["z3", "z4", "z5"]

#: Parameter sampling constraints
CONSTRAINTS = [
    "none",
    "all-y-equal",
    "y-distinct",
    "zeta8-boundary(+)",
    "zeta8-boundary(-)",
    "zeta8-generic",
    "z-boundary",
]

#: Inclusive range of sampled numerators and denominators
SAMPLE_RANGE = (1, 50)

#: Default random seed
SEED = 0

#: Largest degree for which the Schreier transversal is built
MAX_TRANSVERSAL_DEGREE = 6

#: Largest degree for which subgroup presentations are rewritten
MAX_PRESENTATION_DEGREE = 5

#: Smallest degree covered by the representation classification
MIN_REP_DEGREE = 3

#: Default word length bound of the kernel search
KERNEL_SEARCH_MAX_LEN = 16

#: Default number of words kept per breadth-first level
KERNEL_SEARCH_BEAM = 20000

#: Families sampled into the default battery of representation instances
PANEL_FAMILIES = ["z2", "z3", "z6", "z8"]

#: Sampling constraints of panel families other than "none"; z8 avoids its
#: reducible boundary
PANEL_CONSTRAINTS = {"z8": "zeta8-generic"}

#: Statuses of kernel search hits
SEARCH_STATUSES = ["certified", "unresolved"]
