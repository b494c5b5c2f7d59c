"""Calibrated projection values on skeleton trees, 2p+q <= 6.

Generated by operad_forge.calibration; regenerate with
``python -m operad_forge.calibration`` instead of editing.
"""

from fractions import Fraction

SKELETON_VALUES = {
    ('n', (), (('n', (), (('n', (('s', 1),), ()), ('n', (('s', 2),), (('p',),)))), ('p',))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 2)},
    ('n', (), (('n', (), (('n', (('s', 1),), (('n', (('s', 2),), ()),)), ('p',))), ('p',))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(-1, 2)},
    ('n', (), (('n', (), (('n', (('s', 1),), (('p',),)), ('n', (('s', 2),), ()))), ('p',))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 2)},
    ('n', (), (('n', (), (('n', (('s', 1),), (('p',),)), ('p',))), ('n', (('s', 2),), ()))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 1)},
    ('n', (), (('n', (), (('n', (('s', 2),), ()), ('n', (('s', 1),), (('p',),)))), ('p',))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 2)},
    ('n', (), (('n', (), (('n', (('s', 2),), (('n', (('s', 1),), ()),)), ('p',))), ('p',))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(-1, 2)},
    ('n', (), (('n', (), (('n', (('s', 2),), (('p',),)), ('n', (('s', 1),), ()))), ('p',))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 2)},
    ('n', (), (('n', (), (('n', (('s', 2),), (('p',),)), ('p',))), ('n', (('s', 1),), ()))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 1)},
    ('n', (), (('n', (), (('p',), ('n', (('s', 1),), ()))), ('n', (('s', 2),), (('p',),)))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 2)},
    ('n', (), (('n', (), (('p',), ('n', (('s', 1),), (('n', (('s', 2),), ()),)))), ('p',))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(-1, 2)},
    ('n', (), (('n', (), (('p',), ('n', (('s', 1),), (('p',),)))), ('n', (('s', 2),), ()))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 2)},
    ('n', (), (('n', (), (('p',), ('n', (('s', 2),), ()))), ('n', (('s', 1),), (('p',),)))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 2)},
    ('n', (), (('n', (), (('p',), ('n', (('s', 2),), (('n', (('s', 1),), ()),)))), ('p',))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(-1, 2)},
    ('n', (), (('n', (), (('p',), ('n', (('s', 2),), (('p',),)))), ('n', (('s', 1),), ()))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 2)},
    ('n', (), (('n', (), (('p',), ('p',))), ('n', (('s', 1),), (('n', (('s', 2),), ()),)))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(-1, 2)},
    ('n', (), (('n', (), (('p',), ('p',))), ('n', (('s', 2),), (('n', (('s', 1),), ()),)))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(-1, 2)},
    ('n', (), (('n', (('s', 1), ('s', 2)), ()), ('n', (('s', 3),), ()))):
        {('n', (('l', (('l', (('s', 1), ('s', 3))), ('s', 2))),), ()): Fraction(1, 2), ('n', (('l', (('l', (('s', 2), ('s', 3))), ('s', 1))),), ()): Fraction(1, 2)},
    ('n', (), (('n', (('s', 1), ('s', 3)), ()), ('n', (('s', 2),), ()))):
        {('n', (('l', (('l', (('s', 1), ('s', 2))), ('s', 3))),), ()): Fraction(1, 2), ('n', (('l', (('l', (('s', 2), ('s', 3))), ('s', 1))),), ()): Fraction(1, 2)},
    ('n', (), (('n', (('s', 1),), ()), ('n', (), (('n', (('s', 2),), (('p',),)), ('p',))))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 2)},
    ('n', (), (('n', (('s', 1),), ()), ('n', (('s', 2),), ()), ('n', (('s', 3),), ()))):
        {('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('n', (('s', 3),), ()))): Fraction(-1, 1)},
    ('n', (), (('n', (('s', 1),), ()), ('n', (('s', 2),), (('n', (), (('p',), ('p',))),)))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 2)},
    ('n', (), (('n', (('s', 1),), ()), ('n', (('s', 2),), (('n', (('s', 3),), ()),)))):
        {('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('n', (('s', 3),), ()))): Fraction(1, 2), ('n', (), (('n', (('l', (('s', 1), ('s', 3))),), ()), ('n', (('s', 2),), ()))): Fraction(-1, 2), ('n', (), (('n', (('l', (('s', 2), ('s', 3))),), ()), ('n', (('s', 1),), ()))): Fraction(-1, 2)},
    ('n', (), (('n', (('s', 1),), ()), ('n', (('s', 3),), ()), ('n', (('s', 2),), ()))):
        {('n', (), (('n', (('l', (('s', 1), ('s', 3))),), ()), ('n', (('s', 2),), ()))): Fraction(-1, 1)},
    ('n', (), (('n', (('s', 1),), ()), ('n', (('s', 3),), (('n', (('s', 2),), ()),)))):
        {('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('n', (('s', 3),), ()))): Fraction(-1, 2), ('n', (), (('n', (('l', (('s', 1), ('s', 3))),), ()), ('n', (('s', 2),), ()))): Fraction(1, 2), ('n', (), (('n', (('l', (('s', 2), ('s', 3))),), ()), ('n', (('s', 1),), ()))): Fraction(-1, 2)},
    ('n', (), (('n', (('s', 1),), ()), ('p',), ('n', (('s', 2),), ()))):
        {('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))): Fraction(-1, 2)},
    ('n', (), (('n', (('s', 1),), (('n', (), (('p',), ('p',))),)), ('n', (('s', 2),), ()))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(3, 2)},
    ('n', (), (('n', (('s', 1),), (('n', (('s', 2),), ()),)), ('n', (), (('p',), ('p',))))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(-1, 2)},
    ('n', (), (('n', (('s', 1),), (('n', (('s', 2),), ()),)), ('n', (('s', 3),), ()))):
        {('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('n', (('s', 3),), ()))): Fraction(-1, 2), ('n', (), (('n', (('l', (('s', 1), ('s', 3))),), ()), ('n', (('s', 2),), ()))): Fraction(1, 2), ('n', (), (('n', (('l', (('s', 2), ('s', 3))),), ()), ('n', (('s', 1),), ()))): Fraction(-1, 2)},
    ('n', (), (('n', (('s', 1),), (('n', (('s', 2),), ()),)), ('p',))):
        {('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))): Fraction(-1, 2)},
    ('n', (), (('n', (('s', 1),), (('n', (('s', 3),), ()),)), ('n', (('s', 2),), ()))):
        {('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('n', (('s', 3),), ()))): Fraction(1, 2), ('n', (), (('n', (('l', (('s', 1), ('s', 3))),), ()), ('n', (('s', 2),), ()))): Fraction(-1, 2), ('n', (), (('n', (('l', (('s', 2), ('s', 3))),), ()), ('n', (('s', 1),), ()))): Fraction(-1, 2)},
    ('n', (), (('n', (('s', 1),), (('p',),)), ('n', (), (('n', (('s', 2),), ()), ('p',))))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 2)},
    ('n', (), (('n', (('s', 1),), (('p',),)), ('n', (), (('p',), ('n', (('s', 2),), ()))))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 1)},
    ('n', (), (('n', (('s', 2), ('s', 3)), ()), ('n', (('s', 1),), ()))):
        {('n', (('l', (('l', (('s', 1), ('s', 2))), ('s', 3))),), ()): Fraction(1, 2), ('n', (('l', (('l', (('s', 1), ('s', 3))), ('s', 2))),), ()): Fraction(1, 2)},
    ('n', (), (('n', (('s', 2),), ()), ('n', (), (('n', (('s', 1),), (('p',),)), ('p',))))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 2)},
    ('n', (), (('n', (('s', 2),), ()), ('n', (('s', 1),), ()), ('n', (('s', 3),), ()))):
        {('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('n', (('s', 3),), ()))): Fraction(-1, 1)},
    ('n', (), (('n', (('s', 2),), ()), ('n', (('s', 1),), (('n', (), (('p',), ('p',))),)))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 2)},
    ('n', (), (('n', (('s', 2),), ()), ('n', (('s', 1),), (('n', (('s', 3),), ()),)))):
        {('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('n', (('s', 3),), ()))): Fraction(1, 2), ('n', (), (('n', (('l', (('s', 1), ('s', 3))),), ()), ('n', (('s', 2),), ()))): Fraction(-1, 2), ('n', (), (('n', (('l', (('s', 2), ('s', 3))),), ()), ('n', (('s', 1),), ()))): Fraction(-1, 2)},
    ('n', (), (('n', (('s', 2),), ()), ('n', (('s', 3),), ()), ('n', (('s', 1),), ()))):
        {('n', (), (('n', (('l', (('s', 2), ('s', 3))),), ()), ('n', (('s', 1),), ()))): Fraction(-1, 1)},
    ('n', (), (('n', (('s', 2),), ()), ('n', (('s', 3),), (('n', (('s', 1),), ()),)))):
        {('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('n', (('s', 3),), ()))): Fraction(-1, 2), ('n', (), (('n', (('l', (('s', 1), ('s', 3))),), ()), ('n', (('s', 2),), ()))): Fraction(-1, 2), ('n', (), (('n', (('l', (('s', 2), ('s', 3))),), ()), ('n', (('s', 1),), ()))): Fraction(1, 2)},
    ('n', (), (('n', (('s', 2),), ()), ('p',), ('n', (('s', 1),), ()))):
        {('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))): Fraction(-1, 2)},
    ('n', (), (('n', (('s', 2),), (('n', (), (('p',), ('p',))),)), ('n', (('s', 1),), ()))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(3, 2)},
    ('n', (), (('n', (('s', 2),), (('n', (('s', 1),), ()),)), ('n', (), (('p',), ('p',))))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(-1, 2)},
    ('n', (), (('n', (('s', 2),), (('n', (('s', 1),), ()),)), ('n', (('s', 3),), ()))):
        {('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('n', (('s', 3),), ()))): Fraction(-1, 2), ('n', (), (('n', (('l', (('s', 1), ('s', 3))),), ()), ('n', (('s', 2),), ()))): Fraction(-1, 2), ('n', (), (('n', (('l', (('s', 2), ('s', 3))),), ()), ('n', (('s', 1),), ()))): Fraction(1, 2)},
    ('n', (), (('n', (('s', 2),), (('n', (('s', 1),), ()),)), ('p',))):
        {('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))): Fraction(-1, 2)},
    ('n', (), (('n', (('s', 2),), (('n', (('s', 3),), ()),)), ('n', (('s', 1),), ()))):
        {('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('n', (('s', 3),), ()))): Fraction(1, 2), ('n', (), (('n', (('l', (('s', 1), ('s', 3))),), ()), ('n', (('s', 2),), ()))): Fraction(-1, 2), ('n', (), (('n', (('l', (('s', 2), ('s', 3))),), ()), ('n', (('s', 1),), ()))): Fraction(-1, 2)},
    ('n', (), (('n', (('s', 2),), (('p',),)), ('n', (), (('n', (('s', 1),), ()), ('p',))))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 2)},
    ('n', (), (('n', (('s', 2),), (('p',),)), ('n', (), (('p',), ('n', (('s', 1),), ()))))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 1)},
    ('n', (), (('n', (('s', 3),), ()), ('n', (('s', 1),), ()), ('n', (('s', 2),), ()))):
        {('n', (), (('n', (('l', (('s', 1), ('s', 3))),), ()), ('n', (('s', 2),), ()))): Fraction(-1, 1)},
    ('n', (), (('n', (('s', 3),), ()), ('n', (('s', 1),), (('n', (('s', 2),), ()),)))):
        {('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('n', (('s', 3),), ()))): Fraction(-1, 2), ('n', (), (('n', (('l', (('s', 1), ('s', 3))),), ()), ('n', (('s', 2),), ()))): Fraction(1, 2), ('n', (), (('n', (('l', (('s', 2), ('s', 3))),), ()), ('n', (('s', 1),), ()))): Fraction(-1, 2)},
    ('n', (), (('n', (('s', 3),), ()), ('n', (('s', 2),), ()), ('n', (('s', 1),), ()))):
        {('n', (), (('n', (('l', (('s', 2), ('s', 3))),), ()), ('n', (('s', 1),), ()))): Fraction(-1, 1)},
    ('n', (), (('n', (('s', 3),), ()), ('n', (('s', 2),), (('n', (('s', 1),), ()),)))):
        {('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('n', (('s', 3),), ()))): Fraction(-1, 2), ('n', (), (('n', (('l', (('s', 1), ('s', 3))),), ()), ('n', (('s', 2),), ()))): Fraction(-1, 2), ('n', (), (('n', (('l', (('s', 2), ('s', 3))),), ()), ('n', (('s', 1),), ()))): Fraction(1, 2)},
    ('n', (), (('n', (('s', 3),), (('n', (('s', 1),), ()),)), ('n', (('s', 2),), ()))):
        {('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('n', (('s', 3),), ()))): Fraction(-1, 2), ('n', (), (('n', (('l', (('s', 1), ('s', 3))),), ()), ('n', (('s', 2),), ()))): Fraction(-1, 2), ('n', (), (('n', (('l', (('s', 2), ('s', 3))),), ()), ('n', (('s', 1),), ()))): Fraction(1, 2)},
    ('n', (), (('n', (('s', 3),), (('n', (('s', 2),), ()),)), ('n', (('s', 1),), ()))):
        {('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('n', (('s', 3),), ()))): Fraction(-1, 2), ('n', (), (('n', (('l', (('s', 1), ('s', 3))),), ()), ('n', (('s', 2),), ()))): Fraction(1, 2), ('n', (), (('n', (('l', (('s', 2), ('s', 3))),), ()), ('n', (('s', 1),), ()))): Fraction(-1, 2)},
    ('n', (), (('p',), ('n', (), (('n', (('s', 1),), ()), ('n', (('s', 2),), (('p',),)))))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 2)},
    ('n', (), (('p',), ('n', (), (('n', (('s', 1),), (('n', (('s', 2),), ()),)), ('p',))))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(-1, 2)},
    ('n', (), (('p',), ('n', (), (('n', (('s', 1),), (('p',),)), ('n', (('s', 2),), ()))))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 2)},
    ('n', (), (('p',), ('n', (), (('n', (('s', 2),), ()), ('n', (('s', 1),), (('p',),)))))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 2)},
    ('n', (), (('p',), ('n', (), (('n', (('s', 2),), (('n', (('s', 1),), ()),)), ('p',))))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(-1, 2)},
    ('n', (), (('p',), ('n', (), (('n', (('s', 2),), (('p',),)), ('n', (('s', 1),), ()))))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 2)},
    ('n', (), (('p',), ('n', (), (('p',), ('n', (('s', 1),), (('n', (('s', 2),), ()),)))))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(-1, 2)},
    ('n', (), (('p',), ('n', (), (('p',), ('n', (('s', 2),), (('n', (('s', 1),), ()),)))))):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(-1, 2)},
    ('n', (), (('p',), ('n', (('s', 1),), (('n', (('s', 2),), ()),)))):
        {('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))): Fraction(-1, 2)},
    ('n', (), (('p',), ('n', (('s', 2),), (('n', (('s', 1),), ()),)))):
        {('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))): Fraction(-1, 2)},
    ('n', (('s', 1),), (('n', (), (('n', (), (('p',), ('n', (('s', 2),), ()))), ('p',))),)):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 2)},
    ('n', (('s', 1),), (('n', (), (('n', (), (('p',), ('p',))), ('n', (('s', 2),), ()))),)):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 1)},
    ('n', (('s', 1),), (('n', (), (('p',), ('n', (), (('n', (('s', 2),), ()), ('p',))))),)):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 2)},
    ('n', (('s', 1),), (('n', (), (('p',), ('n', (), (('p',), ('n', (('s', 2),), ()))))),)):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 1)},
    ('n', (('s', 1),), (('n', (('s', 2),), ()),)):
        {('n', (('l', (('s', 1), ('s', 2))),), ()): Fraction(-1, 2)},
    ('n', (('s', 1),), (('n', (('s', 2),), ()), ('n', (('s', 3),), ()))):
        {('n', (('l', (('l', (('s', 1), ('s', 2))), ('s', 3))),), ()): Fraction(1, 3)},
    ('n', (('s', 1),), (('n', (('s', 3),), ()), ('n', (('s', 2),), ()))):
        {('n', (('l', (('l', (('s', 1), ('s', 3))), ('s', 2))),), ()): Fraction(1, 3)},
    ('n', (('s', 2),), (('n', (), (('n', (), (('p',), ('n', (('s', 1),), ()))), ('p',))),)):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 2)},
    ('n', (('s', 2),), (('n', (), (('n', (), (('p',), ('p',))), ('n', (('s', 1),), ()))),)):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 1)},
    ('n', (('s', 2),), (('n', (), (('p',), ('n', (), (('n', (('s', 1),), ()), ('p',))))),)):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 2)},
    ('n', (('s', 2),), (('n', (), (('p',), ('n', (), (('p',), ('n', (('s', 1),), ()))))),)):
        {('n', (), (('n', (), (('n', (('l', (('s', 1), ('s', 2))),), ()), ('p',))), ('p',))): Fraction(1, 1)},
    ('n', (('s', 2),), (('n', (('s', 1),), ()),)):
        {('n', (('l', (('s', 1), ('s', 2))),), ()): Fraction(-1, 2)},
    ('n', (('s', 2),), (('n', (('s', 1),), ()), ('n', (('s', 3),), ()))):
        {('n', (('l', (('l', (('s', 1), ('s', 2))), ('s', 3))),), ()): Fraction(1, 3)},
    ('n', (('s', 2),), (('n', (('s', 3),), ()), ('n', (('s', 1),), ()))):
        {('n', (('l', (('l', (('s', 2), ('s', 3))), ('s', 1))),), ()): Fraction(1, 3)},
    ('n', (('s', 3),), (('n', (('s', 1),), ()), ('n', (('s', 2),), ()))):
        {('n', (('l', (('l', (('s', 1), ('s', 3))), ('s', 2))),), ()): Fraction(1, 3)},
    ('n', (('s', 3),), (('n', (('s', 2),), ()), ('n', (('s', 1),), ()))):
        {('n', (('l', (('l', (('s', 2), ('s', 3))), ('s', 1))),), ()): Fraction(1, 3)},
}
