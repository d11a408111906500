"""
Tests for the hypothesis checks and the triple enumeration.
"""

import unittest
from time import perf_counter

from sympy import n_order, primerange

from quartic.arith import BudgetExceeded
from quartic.conditions import (
    ConditionReport, GeneratorMethod, GeneratorVerdict, PrimeTriple,
    ResidueVerdict, checkConditions, enumerateTriples )
from quartic.util import InvalidArgument

# ( p, q, r ) triples satisfying every hypothesis
QUALIFYING = [ ( 19, 11, 3 ), ( 67, 5, 3 ), ( 11, 3, 5 ), ( 67, 13, 11 ) ]

# triples with known solutions in coprime x, y where p does not divide y
COUNTEREXAMPLES = [ ( 17, 3, 5 ), ( 257, 17, 7 ), ( 65537, 257, 11 ) ]


class testCheckConditions( unittest.TestCase ):

    def testQualifyingTriples(self):
        for triple in QUALIFYING:
            c = checkConditions(*triple)
            self.assertTrue(c.all_satisfied, triple)
            self.assertTrue(all(holds for _, holds in c.verdicts()), triple)
            self.assertTrue(c.two_residue_cyclotomic, triple)

    def testGeneratorWitnesses(self):
        expected = { ( 19, 11, 3 ): ( 121, 110, GeneratorMethod.FULL, 2 ),
                     ( 67, 5, 3 ): ( 25, 20, GeneratorMethod.FULL, 2 ),
                     ( 11, 3, 5 ): ( 81, 54, GeneratorMethod.LIFTED, 4 ),
                     ( 67, 13, 11 ): ( 13 ** 10, 13 ** 9 * 12,
                                       GeneratorMethod.LIFTED, 10 ) }
        for triple, ( modulus, groupOrder, method, qOrder ) in expected.items():
            c = checkConditions(*triple)
            g = c.p_generates
            self.assertEqual((g.modulus, g.group_order, g.order, g.method),
                             (modulus, groupOrder, groupOrder, method))
            self.assertEqual((c.q_generates.order, c.q_generates.group_order),
                             (qOrder, qOrder))

    def testFullOrderCrossCheck(self):
        start = perf_counter()
        c = checkConditions(67, 13, 11, fullOrder=True)
        self.assertLess(perf_counter() - start, 5)
        self.assertTrue(c.p_generates.holds)
        self.assertEqual(c.p_generates.method, GeneratorMethod.FULL)
        groupOrder = 13 ** 9 * 12
        self.assertEqual(c.p_generates,
                         GeneratorVerdict(True, groupOrder, groupOrder,
                                          13 ** 10, GeneratorMethod.FULL))

    def testLiftedWitnessSkipsFullModulus(self):
        "q**(r-1) has over 10000 digits; nothing is powered at that modulus"
        start = perf_counter()
        c = checkConditions(19, 11, 10007)
        self.assertLess(perf_counter() - start, 2)
        groupOrder = 10 * 11 ** 10005
        self.assertEqual(c.p_generates,
                         GeneratorVerdict(True, groupOrder, groupOrder,
                                          11 ** 10006, GeneratorMethod.LIFTED))

    def testLiftedAndFullWitnessesAgree(self):
        for triple in QUALIFYING + COUNTEREXAMPLES + [(7, 3, 5), (10, 3, 5)]:
            lifted = checkConditions(*triple).p_generates
            full = checkConditions(*triple, fullOrder=True).p_generates
            self.assertEqual((lifted.holds, lifted.order),
                             (full.holds, full.order), triple)
            self.assertEqual(full.method, GeneratorMethod.FULL)

    def testCounterexampleTriplesFail(self):
        for triple in COUNTEREXAMPLES:
            c = checkConditions(*triple)
            self.assertTrue(c.distinct, triple)
            self.assertFalse(c.all_satisfied, triple)
            self.assertTrue(c.two_residue_cyclotomic, triple)

    def testFailureProfile17_3_5(self):
        c = checkConditions(17, 3, 5)
        self.assertFalse(c.all_satisfied)
        self.assertEqual(c.p_mod4, ResidueVerdict(1, False))
        self.assertEqual(c.p_mod_r, ResidueVerdict(2, False))
        self.assertEqual(c.r_mod8, ResidueVerdict(5, True))
        self.assertTrue(c.q_generates.holds)
        self.assertTrue(c.two_residue)
        self.assertFalse(c.p_generates.holds)
        # 17 = -1 (mod 9), so its order mod 81 is 2 * 9
        self.assertEqual(c.p_generates.order, 18)

    def testFailureProfile257_17_7(self):
        c = checkConditions(257, 17, 7)
        self.assertFalse(c.all_satisfied)
        self.assertEqual(c.p_mod4, ResidueVerdict(1, False))
        self.assertEqual(c.p_mod_r, ResidueVerdict(5, False))
        self.assertEqual(c.r_mod8, ResidueVerdict(7, False))
        self.assertTrue(c.q_generates.holds)
        self.assertTrue(c.two_residue)
        self.assertFalse(c.p_generates.holds)
        self.assertEqual(c.p_generates.order, n_order(257, 17 ** 6))

    def testFailureProfile65537_257_11(self):
        c = checkConditions(65537, 257, 11)
        self.assertFalse(c.all_satisfied)
        self.assertEqual(c.p_mod4, ResidueVerdict(1, False))
        self.assertEqual(c.p_mod_r, ResidueVerdict(10, False))
        self.assertEqual(c.r_mod8, ResidueVerdict(3, True))
        self.assertFalse(c.q_generates.holds)
        self.assertEqual(c.q_generates.order, 5)
        self.assertTrue(c.two_residue)
        self.assertFalse(c.p_generates.holds)
        self.assertEqual(c.p_generates.order, n_order(65537, 257 ** 10))

    def testNonPrimeInputsAreFlagged(self):
        c = checkConditions(15, 11, 3)
        self.assertFalse(c.primes)
        self.assertFalse(c.distinct)
        self.assertFalse(c.all_satisfied)
        c = checkConditions(19, 19, 3)
        self.assertTrue(c.primes)
        self.assertFalse(c.distinct)
        self.assertIsNone(c.p_generates.order)
        c = checkConditions(19, 2, 3)
        self.assertFalse(c.q_not_two)
        self.assertFalse(c.two_residue)
        self.assertFalse(c.all_satisfied)

    def testDegenerateInputsDoNotRaise(self):
        for triple in ( ( 0, 0, 0 ), ( 5, 3, -7 ), ( 5, -3, 3 ), ( 1, 1, 1 ) ):
            c = checkConditions(*triple)
            self.assertFalse(c.all_satisfied, triple)

    def testWitnessOrdersDivideGroupOrders(self):
        for p in primerange(3, 60):
            for q in primerange(3, 14):
                for r in primerange(3, 8):
                    c = checkConditions(p, q, r)
                    for g in ( c.p_generates, c.q_generates ):
                        if g.order is not None:
                            self.assertEqual(g.group_order % g.order, 0,
                                             (p, q, r))
                    self.assertEqual(c.all_satisfied,
                                     all(h for _, h in c.verdicts()))

    def testReportRoundTrip(self):
        c = checkConditions(67, 13, 11)
        self.assertEqual(ConditionReport.fromDict(c.asDict()), c)
        self.assertEqual(c.triple, PrimeTriple(67, 13, 11))


class testEnumerateTriples( unittest.TestCase ):

    @staticmethod
    def bruteForce(pMax, qMax, rMax):
        found = []
        for p in primerange(2, pMax + 1):
            for q in primerange(2, qMax + 1):
                for r in primerange(2, rMax + 1):
                    if checkConditions(p, q, r).all_satisfied:
                        found.append((p, q, r))
        return found

    def testContainsKnownTriples(self):
        triples = [c.triple.asTuple() for c in enumerateTriples(70, 15, 12)]
        for triple in QUALIFYING[ :3 ]:
            self.assertIn(triple, triples)
        self.assertEqual(triples, sorted(triples))

    def testMatchesBruteForce(self):
        for bounds in ( ( 70, 15, 12 ), ( 50, 15, 12 ) ):
            triples = [c.triple.asTuple() for c in enumerateTriples(*bounds)]
            self.assertEqual(triples, self.bruteForce(*bounds))

    def testResultsRecheck(self):
        for c in enumerateTriples(70, 15, 12):
            p, q, r = c.triple.asTuple()
            self.assertEqual(checkConditions(p, q, r), c)
            self.assertEqual(p % 4, 3)
            self.assertEqual(p % r, 1)
            self.assertIn(r % 8, (3, 5))
            self.assertNotEqual(q, 2)
            self.assertEqual(n_order(q, r), r - 1)

    def testEmptyRange(self):
        self.assertEqual(enumerateTriples(2, 2, 2), [])

    def testDeterministic(self):
        self.assertEqual(enumerateTriples(100, 20, 14),
                         enumerateTriples(100, 20, 14))

    def testWorkersGiveSameResult(self):
        self.assertEqual(enumerateTriples(100, 20, 14, workers=2),
                         enumerateTriples(100, 20, 14))

    def testBudget(self):
        with self.assertRaises(BudgetExceeded):
            enumerateTriples(70, 15, 12, budget=10)

    def testBounds(self):
        with self.assertRaises(InvalidArgument):
            enumerateTriples(1, 15, 12)


if __name__ == '__main__':
    unittest.main()
