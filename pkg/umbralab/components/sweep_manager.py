# For running identity checks over parameter grids

import itertools
import logging
from concurrent.futures import Future, ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional

from umbralab import config
from umbralab.components import identities
from umbralab.components.identities import IdentityReport
from umbralab.errors import ParamParseError

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("csv", "json")


@dataclass
class SweepSpec:
    """An identity, the axes to sweep (in order) and the parameters held fixed."""
    identity_id: str
    axes: Dict[str, List[Any]] = field(default_factory=dict)
    fixed: Dict[str, Any] = field(default_factory=dict)
    tol_abs: Optional[float] = None
    tol_rel: Optional[float] = None
    output_format: str = "csv"
    out_path: Optional[str] = None

    def __post_init__(self):
        if self.output_format not in OUTPUT_FORMATS:
            raise ParamParseError(f"output format must be one of {', '.join(OUTPUT_FORMATS)}, got {self.output_format!r}")
        for name, values in self.axes.items():
            if not values:
                raise ParamParseError(f"sweep axis {name} is empty")
        overlap = sorted(set(self.axes) & set(self.fixed))
        if overlap:
            raise ParamParseError(f"parameter(s) {', '.join(overlap)} both swept and fixed")
        identities.get_spec(self.identity_id)

    def points(self) -> Iterator[Dict[str, Any]]:
        """Cartesian product of the axes; the last axis varies fastest."""
        names = list(self.axes)
        for combo in itertools.product(*(self.axes[n] for n in names)):
            point = dict(self.fixed)
            point.update(zip(names, combo))
            yield point


class SweepManager:
    """Runs verify() for every point of a SweepSpec on a thread pool."""
    def __init__(self, spec: SweepSpec, workers: Optional[int] = None):
        self.spec = spec
        self.workers = workers or config.WORKERS

    def _verify(self, params: Dict[str, Any]) -> IdentityReport:
        return identities.verify(self.spec.identity_id, params, self.spec.tol_abs, self.spec.tol_rel)

    def run(self) -> List[IdentityReport]:
        """Reports in input order, whatever order the workers finish in."""
        points = list(self.spec.points())
        logger.info(f"sweeping {self.spec.identity_id} over {len(points)} point(s) with {self.workers} worker(s)")
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            futures: List[Future] = [executor.submit(self._verify, point) for point in points]
        return [future.result() for future in futures]
