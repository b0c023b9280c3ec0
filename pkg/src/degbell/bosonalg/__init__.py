from .diffop import apply_as_diff_operator, poly, x_power
from .expr import (
    A,
    AD,
    N,
    Annihilate,
    Create,
    DegPower,
    Number,
    OperatorExpr,
    Product,
    Scalar,
    ScalarMul,
    Sum,
)
from .normalform import (
    NormalForm,
    commutation_chain_check,
    commutation_chain_sides,
    creation_weighted_power,
    deg_number_power,
    monomial_product,
    normal_order,
    stirling_prediction,
    theorem1_check,
)
from .parser import ParseError, parse
from .rewrite import naive_normal_order, naive_word_normal_order, random_word, word_expr
