"""Solver for CHRISTMAS LIGHTS' FIXTURE, an impartial game with carry-on moves."""

from .core import (MOON, Component, GrundyValue, Moon, Outcome, ParseError, Piece,
                   Position, Run, format_value, parse_component, parse_position,
                   parse_value, print_component, print_position, runs_of)
from .fast import fold_steps, grundy_fast, triple_value
from .moves import (IllegalMoveError, Move, MoveKind, apply, apply_position,
                    legal_moves, legal_moves_position)
from .oracle import (EvalSets, TranspositionTable, eval_sets, grundy_oracle, mex,
                     outcome_playout, playout_check, verify_range)
from .strategy import WinningLine, best_line, validate_line
from .sums import gsum, gsum_all, outcome, position_value

__all__ = [
    "MOON", "Component", "EvalSets", "GrundyValue", "IllegalMoveError", "Moon", "Move",
    "MoveKind", "Outcome", "ParseError", "Piece", "Position", "Run", "TranspositionTable",
    "WinningLine", "apply", "apply_position", "best_line", "eval_sets", "fold_steps",
    "format_value", "grundy_fast", "grundy_oracle", "gsum", "gsum_all", "legal_moves",
    "legal_moves_position", "mex", "outcome", "outcome_playout", "parse_component",
    "parse_position", "parse_value", "playout_check", "position_value", "print_component",
    "print_position", "runs_of", "triple_value", "validate_line", "verify_range",
]
