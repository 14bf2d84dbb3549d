"""Greedy curve-diagram relaxation solver for the braid group word problem.

The library represents a braid by the reduced curve diagram it induces on a
punctured disk, codes the diagram by integer vectors, and untangles it
greedily with semicircular moves.  The sign-consistent variant produces
output words that never mix sigma_1 with its inverse; for three strands its
outputs are of exactly minimal length, which the independent oracles in
:mod:`braidrelax.oracle` verify.
"""

from .diagram import (BandCounts, ContractError, DiagramCoding,
                      IntegrityError, Sigma1Class, apply_generator,
                      apply_move, band_coding, complexity, diagram_of_word,
                      dump_text, is_trivial, mirror, sigma1_class,
                      sigma_k_class, to_machine, trivial_coding)
from .harness import (BASELINE_MEANS, RandomWordSpec, StatsRecord,
                      SubwordAuditReport, audit_lemma52, random_word,
                      ratio_tracker, run_cell, run_table)
from .oracle import (FreeGroupEndo, MinLengthCertificate, SearchBoundError,
                     artin_endo, bfs_min_length, compose, identity_endo,
                     is_trivial_braid)
from .relax import (EngineError, Mode, MoveConstraint, RelaxationTrace,
                    check_condition_b, greedy_step, relax_sigma1,
                    relax_standard)
from .words import (BraidWord, DomainError, DottedWord, ParseError,
                    SemicircularMove, enumerate_moves, expand_move,
                    format_word, free_reduce, invert_word, parse_dotted,
                    parse_word)

__version__ = "0.1.0"
