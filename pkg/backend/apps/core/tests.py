from django.test import SimpleTestCase

from .exceptions import BudgetExceeded, LiteralSyntaxError, NovkError


class ExceptionsTest(SimpleTestCase):

    def test_literal_error_carries_position(self):
        e = LiteralSyntaxError('caractere inesperado', 2, 7)
        self.assertEqual((e.line, e.column), (2, 7))
        self.assertEqual(str(e), 'linha 2, coluna 7: caractere inesperado')
        self.assertIsInstance(e, NovkError)

    def test_budget_message(self):
        self.assertEqual(str(BudgetExceeded('min_generators', 512)), 'min_generators: orçamento 512 excedido')
        e = BudgetExceeded('span', 10, needed=40)
        self.assertEqual((e.limit, e.needed), (10, 40))
        self.assertIn('(necessário: 40)', str(e))
