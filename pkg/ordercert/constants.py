"""Constants and defaults for ordercert."""

import re

SCHEMA_VERSION = "ordercert/1"

# Environment variable overriding every size guard at once
ENV_MAX_N = "ORDERCERT_MAX_N"

# Size guards (vertex counts)
DEFAULT_SEARCH_MAX_N = 16
DEFAULT_BANDWIDTH_MAX_N = 14
DEFAULT_CATERPILLAR_MAX_N = 10
DEFAULT_ENUMERATION_MAX_N = 7

# graph6 layout
GRAPH6_HEADER = ">>graph6<<"
GRAPH6_OFFSET = 63
GRAPH6_LONG_MARKER = 126
GRAPH6_SHORT_MAX_N = 62
GRAPH6_MEDIUM_MAX_N = 258047
GRAPH6_LONG_MAX_N = 68719476735

# Family specs such as "cycle:5", "complete-bipartite:3,3", "empty:4"
_RE_FAMILY_SPEC = re.compile(r"^([a-z][a-z0-9_\-]*):([0-9,\s]+)$")

# Edge-list comments start with '#'
_RE_EDGE_LIST_COMMENT = re.compile(r"#.*$")

GRAPH6_SUFFIXES = (".g6", ".graph6")
