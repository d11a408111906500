"""
Tests for the quartic command line: exit codes, report formats and the
golden reports under golden/.
"""

import glob
import json
import os
import tempfile
import unittest
from cmd import Cmd
from io import StringIO

from quartic.cli import CLI, run
from quartic.conditions import checkConditions
from quartic.diophantine import EquationInstance, decomposeSolution
from quartic.report import Report, SCHEMA_VERSION, readTriplesCsv

GOLDEN = os.path.join( os.path.dirname( __file__ ), 'golden' )


def quartic(*argv):
    "Run the cli; returns ( exit code, stdout text, stderr text )"
    out, err = StringIO(), StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


class testReports( unittest.TestCase ):

    def testVerifyJson(self):
        code, out, _ = quartic('verify', '17', '3', '5', '5', '2', '--json')
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertEqual(report['schema_version'], SCHEMA_VERSION)
        self.assertEqual(report['command'], 'verify')
        self.assertEqual(report['inputs'],
                         {'p': 17, 'q': 3, 'r': 5, 'x': 5, 'y': 2,
                          'full_order': False, 'budget': None})
        self.assertTrue(report['outputs']['is_solution'])
        self.assertFalse(report['outputs']['p_divides_y'])
        self.assertGreaterEqual(report['timing_ms'], 0)

    def testJsonIsKeySorted(self):
        _, out, _ = quartic('order', '2', '43', '--json')
        self.assertEqual(out, json.dumps(json.loads(out), sort_keys=True,
                                         indent=2) + '\n')

    def testCheckTable(self):
        code, out, _ = quartic('check', '19', '11', '3')
        self.assertEqual(code, 0)
        self.assertIn('p ≡ 3 (mod 4): yes (19 ≡ 3)', out)
        self.assertIn('p generates U(Z_121): yes', out)
        self.assertIn('all satisfied: yes', out)
        self.assertNotIn(': no', out)
        code, out, _ = quartic('check', '17', '3', '5')
        self.assertEqual(code, 0)
        self.assertIn('p ≡ 3 (mod 4): no (17 ≡ 1)', out)
        self.assertIn('all satisfied: no', out)

    def testOrder(self):
        code, out, _ = quartic('order', '2', '43')
        self.assertEqual(code, 0)
        self.assertIn('order: 14', out)

    def testNegativeArguments(self):
        code, out, _ = quartic('trace', '257', '17', '7', '15', '-2', '--json')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['outputs']['y1'], -1)

    def testSearch(self):
        code, out, _ = quartic('search', '17', '3', '5', '--y-bound', '4',
                               '--x-bound', '100', '--json')
        self.assertEqual(code, 0)
        pairs = [(s['x'], s['y']) for s in json.loads(out)['outputs']['solutions']]
        self.assertIn((5, 2), pairs)
        self.assertIn((-5, 2), pairs)

    def testRoundTripToRecords(self):
        _, out, _ = quartic('check', '67', '13', '11', '--json')
        self.assertEqual(Report.fromJson(out).record(),
                         checkConditions(67, 13, 11))
        _, out, _ = quartic('trace', '17', '3', '5', '5', '2', '--json')
        self.assertEqual(Report.fromJson(out).record(),
                         decomposeSolution(EquationInstance(17, 3, 5), 5, 2))
        _, out, _ = quartic('symbol', '2', '5', '11', '--json')
        symbol, kummer = Report.fromJson(out).record()
        self.assertEqual((symbol.witness, kummer.kind), (4, 'Inert'))

    def testOutFile(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'report.json')
            code, out, _ = quartic('split', '2', '43', '--json', '--out', path)
            self.assertEqual(code, 0)
            self.assertEqual(out, '')
            with open(path, encoding='utf-8') as f:
                self.assertEqual(json.load(f)['outputs']['f'], 14)

    def testScanCsvIsReproducible(self):
        with tempfile.TemporaryDirectory() as tmp:
            contents = []
            for name in ('a.csv', 'b.csv'):
                path = os.path.join(tmp, name)
                code, _, _ = quartic('scan', '--p-max', '70', '--q-max', '15',
                                     '--r-max', '12', '--csv', path)
                self.assertEqual(code, 0)
                with open(path, 'rb') as f:
                    contents.append(f.read())
            self.assertEqual(contents[0], contents[1])
            self.assertTrue(contents[0].startswith(b'p,q,r\n'))
            with open(path, newline='') as f:
                triples = readTriplesCsv(f)
            for triple in ((19, 11, 3), (67, 5, 3), (11, 3, 5)):
                self.assertIn(triple, triples)


class testExitCodes( unittest.TestCase ):

    def testDomainErrors(self):
        for argv, reason in (
                (('verify', '4', '3', '5', '1', '1'), 'InvalidInstance'),
                (('split', '3', '9'), 'UnsupportedConductor'),
                (('symbol', '2', '5', '5'), 'RamifiedModulus'),
                (('order', '6', '9'), 'NotCoprime'),
                (('trace', '17', '3', '5', '5', '3'), 'NotASolution'),
                (('scan', '--p-max', '70', '--q-max', '15', '--r-max', '12',
                  '--budget', '10'), 'BudgetExceeded')):
            code, out, err = quartic(*argv)
            self.assertEqual(code, 1, argv)
            self.assertEqual(out, '')
            self.assertTrue(err.startswith('error: %s: ' % reason), err)
            self.assertEqual(err.count('\n'), 1)

    def testUsageErrors(self):
        for argv in ((), ('bogus',), ('check',), ('check', '1', '2'),
                     ('check', 'a', 'b', 'c'), ('check', '19', '11', '3.5'),
                     ('check', '19', '11', '3', '--nope'),
                     ('check', '19', '11', '3', '4'),
                     ('check', '19', '11', '3', '-v', 'loud'),
                     ('check', '19', '11', '3', '--budget'),
                     ('scan',), ('scan', '--p-max', 'x', '--q-max', '2',
                                 '--r-max', '2'),
                     ('verify', '1', '2', '3', '4'),
                     ('search', '17', '3', '5'), ('-v',), ('--json',),
                     ('order', '2', '43', '--workers', 'many')):
            code, _, err = quartic(*argv)
            self.assertEqual(code, 2, argv)
            self.assertTrue(err, argv)

    def testErrorLineSurvivesQuietLogging(self):
        code, _, err = quartic('order', '6', '9', '-v', 'critical')
        self.assertEqual(code, 1)
        self.assertTrue(err.startswith('error: NotCoprime: '), err)

    def testOneCommandPerInvocation(self):
        self.assertEqual(CLI.prompt, Cmd.prompt)
        code, _, err = quartic('order', '2', '43', 'order', '2', '43')
        self.assertEqual(code, 2)
        self.assertTrue(err.startswith('usage error: '), err)

    def testVerbosity(self):
        code, out, err = quartic('order', '2', '43', '-v', 'debug')
        self.assertEqual(code, 0)
        self.assertIn('order: 14', out)
        self.assertIn('*** order finished in', err)
        code, _, err = quartic('order', '2', '43')
        self.assertEqual(err, '')

    def testHelpAndVersion(self):
        code, out, _ = quartic('--help')
        self.assertEqual(code, 0)
        self.assertIn('scan', out)
        code, out, _ = quartic('help', 'trace')
        self.assertEqual(code, 0)
        self.assertIn('quartic trace', out)
        code, out, _ = quartic('--version')
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith('quartic '))


class testGolden( unittest.TestCase ):

    def testGoldenReports(self):
        "Each golden file pins the complete outputs of one report"
        paths = sorted(glob.glob(os.path.join(GOLDEN, '*.json')))
        self.assertEqual(len(paths), 20)
        for path in paths:
            with open(path, encoding='utf-8') as f:
                golden = json.load(f)
            code, out, err = quartic(*golden['argv'], '--json')
            name = os.path.basename(path)
            self.assertEqual(code, 0, '%s: %s' % (name, err))
            report = json.loads(out)
            self.assertEqual(report['command'], golden['argv'][0])
            self.assertEqual(report['outputs'], golden['outputs'], name)
            self.assertEqual(Report.fromJson(out).toJson(), out, name)


if __name__ == '__main__':
    unittest.main()
