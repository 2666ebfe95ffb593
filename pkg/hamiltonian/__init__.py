from hamiltonian.certificates import QhCertificate, QhRefutation, QhWitness, qh_certificate, qh_refutation
from hamiltonian.cube_power import cube3_hamiltonian_path
from hamiltonian.difference import hamiltonian_difference, hamiltonian_difference_report
from hamiltonian.lattice import NashWilliamsBasis, nash_williams_basis
from hamiltonian.paths import HamiltonicityReport, analyze, hamiltonian_path
from hamiltonian.spanning import SpanningWalk, cube_spanning_path, grid_spanning_path
