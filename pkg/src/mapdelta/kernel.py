"""Select the compiled selection-scan kernel, falling back to pure Python.

Set MAPDELTA_PURE_PYTHON=1 to force the fallback (used by the benchmark and
the kernel-equivalence tests).
"""

import os

if os.environ.get("MAPDELTA_PURE_PYTHON"):
    from . import _scan_py as scan
else:
    try:
        from . import _scan as scan  # type: ignore[attr-defined]
    except ImportError:
        from . import _scan_py as scan

survey_selections = scan.survey_selections
IS_COMPILED = scan.IS_COMPILED
