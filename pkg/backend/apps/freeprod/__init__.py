"""
Produto livre indexado por níveis ∗_k G_k: formas normais, translação,
mapas zip, altura, redução cíclica e potências.
"""
from .product import (
    BOTTOM,
    Letter,
    ProductWord,
    Window,
    pw_reduce,
    pw_mul,
    pw_inv,
    pw_shift,
    pw_zip,
    pw_height,
    pw_cyclic_reduce,
    pw_power,
    pw_is_single_letter,
)
from .literal import parse_product_word, render_product_word

__all__ = [
    'BOTTOM',
    'Letter',
    'ProductWord',
    'Window',
    'pw_reduce',
    'pw_mul',
    'pw_inv',
    'pw_shift',
    'pw_zip',
    'pw_height',
    'pw_cyclic_reduce',
    'pw_power',
    'pw_is_single_letter',
    'parse_product_word',
    'render_product_word',
]
