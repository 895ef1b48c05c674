"""First-order sentences over a name-free language, and their rewriting
into ``exists x1..xN. G`` with ``G`` totally symmetric."""
from .parser import ParseError, Signature, SignatureError, parse, signature_of
from .prenex import PrenexForm, prenex, prenex_form
from .semantics import (MAX_MODELS, EvaluationError, FiniteModel, ModelBatch, ModelExplosionError, Verdict,
                        check_equivalence, check_total_symmetry, enumerate_models, evaluate,
                        satisfiable_cardinalities, valid)
from .symmetrize import (BoundedCheckWarning, HypothesisError, Symmetrization, build_A, expand_quantifiers,
                         symmetrize, symmetrize_existential)
from .syntax import (FALSE, TRUE, And, Eq, Exists, Forall, Formula, Iff, Implies, Name, Not, Or, Pred, Var,
                     conj, disj, free_variables, is_closed, names, neq, predicates, size, to_text)
