"""Exception hierarchy shared by all rainbow4 modules."""


class Rainbow4Error(Exception):
    """Base class for all library errors."""


class InvalidParams(Rainbow4Error):
    """A generator or constructor received out-of-range parameters."""


class FormatError(Rainbow4Error):
    """A graph or coloring file could not be parsed."""


class UnknownEdge(Rainbow4Error):
    """An edge id does not exist in the graph at hand."""


class PartialColoring(Rainbow4Error):
    """An operation requiring a total coloring got a partial one."""


class SizeCapExceeded(Rainbow4Error):
    """An exact oracle was asked to run above its configured size cap."""


class NotPlanar(Rainbow4Error):
    """A planarity precondition failed."""


class NotOuterplanar(Rainbow4Error):
    """An outerplanarity precondition failed."""


class NotTwoConnected(Rainbow4Error):
    """A 2-connectivity precondition failed."""


class NotBipartite(Rainbow4Error):
    """A bipartiteness precondition failed."""


class NotSubcubic(Rainbow4Error):
    """A maximum-degree-3 precondition failed."""


class InvalidDeclaredCycle(Rainbow4Error):
    """A '# outer-cycle' directive failed validation."""


class DirectiveContradiction(Rainbow4Error):
    """A '# class' directive contradicts the actual graph."""


class LayoutMismatch(Rainbow4Error):
    """An OuterplanarLayout does not describe the given graph."""


class BoundViolated(Rainbow4Error):
    """A constructive colorer exceeded its guaranteed palette bound (a bug)."""


class FMNotBipartite(Rainbow4Error):
    """A per-matching conflict graph contained an odd cycle (invalid input or a bug)."""


class CaseExhaustion(Rainbow4Error):
    """No extension case of a constructive colorer matched (a bug)."""


class Unsupported(Rainbow4Error):
    """The input falls outside every implemented algorithm and the exact cap."""
