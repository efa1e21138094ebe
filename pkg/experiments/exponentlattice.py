import logging
from experiments.base import Base
from lib.exponents.checkers import lattice_violations
from lib.exponents.region import region_scan

logger = logging.getLogger(__name__)

LATTICE_RESOLUTION = 4
# r_i tied to t_i, targets projected out; free (p, q)
EQUAL_EXPONENT_SETUP = {'r1': 't1', 'r2': 't2', 't1': '*', 't2': '*'}
# p and t2 projected out, r_i tied to t_i; free (q, t1)
TARGET_PLANE_SETUP = {'p': '*', 't2': '*', 'r1': 't1', 'r2': 't2'}


class ExponentLattice(Base):
    """
    Structural invariants of the exponent checkers and the two region projections
    """
    name = 'exponent-lattice'

    def run(self):
        violations = lattice_violations(LATTICE_RESOLUTION)
        for invariant, count in violations.items():
            self.check(invariant + ' violations', 0, count, 0, 'count')

        k = self.cfg.k
        toft = region_scan('toft', EQUAL_EXPONENT_SETUP, k)
        pseudo = region_scan('pseudo', EQUAL_EXPONENT_SETUP, k)
        self.check('toft region inside pseudo region (p, q)', 1, int(pseudo.contains(toft)), 0, 'inclusion')

        toft_plane = region_scan('toft', TARGET_PLANE_SETUP, k)
        pseudo_plane = region_scan('pseudo', TARGET_PLANE_SETUP, k)
        coincide = pseudo_plane.contains(toft_plane) and toft_plane.contains(pseudo_plane)
        self.check('toft and pseudo coincide on (q, t1)', 1, int(coincide), 0, 'equality')

        self.result.details = {
            'violations': violations,
            'regions': [region.summary() for region in (toft, pseudo, toft_plane, pseudo_plane)],
        }
        self.regions = {'toft-pq': toft, 'pseudo-pq': pseudo, 'toft-qt1': toft_plane, 'pseudo-qt1': pseudo_plane}
        return self.result


def exponent_lattice_experiment(cfg):
    return ExponentLattice(cfg).run()
