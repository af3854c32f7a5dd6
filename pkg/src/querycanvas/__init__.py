"""querycanvas: a full-stack visual graph-query workbench.

Mines top-k edge-diversified canned patterns from a property graph, composes
visual queries, translates them to Cypher with node-isomorphism constraints,
executes against embedded or remote stores, and lays results out with a
modified force-directed algorithm.
"""

__version__ = "0.1.0"
