# -*- coding: utf-8 -*-

import io
import json
import logging
import os
import re
import shutil
import tempfile

from unittest import TestCase
from unittest import mock

from branchrule.core import main


TESTS_PATH = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
GOLDEN_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                           'golden')
ESTIMATE_RE = re.compile(r'estimate \d\.\d{5}')


class CommandLineTestCase(TestCase):

    def setUp(self):
        self._tmpdir = tempfile.mkdtemp(prefix='branchrule-test')
        patcher = mock.patch('sys.stderr', new_callable=io.StringIO)
        self.stderr = patcher.start()
        self.addCleanup(patcher.stop)

    def tearDown(self):
        shutil.rmtree(self._tmpdir)
        logger = logging.getLogger('branchrule.backend')
        for handler in list(logger.handlers):
            handler.close()
            logger.removeHandler(handler)
        logger.setLevel(logging.NOTSET)
        logger.propagate = True

    def run_command(self, *argv):
        stream = io.StringIO()
        code = main.run(list(argv), stream=stream)
        return code, stream.getvalue()

    def run_json(self, *argv):
        code, output = self.run_command(*(argv + ('--format', 'json')))
        return code, json.loads(output) if output else None


class VerifyTestCase(CommandLineTestCase):

    def test_partition(self):
        """[CLI] Test verification of a single partition"""
        code, output = self.run_command('verify', '--identity', 'cwbr',
                                        '--partition', '3211')
        self.assertEqual(code, 0)
        self.assertIn('cwbr for 3211 (full_expansion)', output)
        self.assertTrue(output.endswith('[verify] Summary: PASS\n'))

    def test_sweep(self):
        """[CLI] Test verification of all partitions of n"""
        argv = ('verify', '--n', '5', '--mode', 'expand')
        code, document = self.run_json(*argv)
        self.assertEqual(code, 0)
        self.assertEqual(len(document['results']), 7)
        self.assertIs(document['pass'], True)
        self.assertEqual(document['schema'], 1)
        self.assertEqual(document['command'], 'verify')
        self.assertEqual(document['config']['n'], 5)
        self.assertIsNone(document['config']['partition'])
        self.assertEqual(self.run_command(*(argv + ('--format', 'json'))),
                         self.run_command(*(argv + ('--format', 'json'))))

    def test_complement(self):
        """[CLI] Test complement equivalence check"""
        code, document = self.run_json('verify', '--identity', 'cwbr-y',
                                       '--partition', '3211', '--complement')
        self.assertEqual(code, 0)
        self.assertEqual(len(document['results']), 2)
        self.assertEqual(document['results'][1]['detail']['complement'],
                         '3221')

    def test_run_file(self):
        """[CLI] Test parameters read from run file"""
        path = os.path.join(TESTS_PATH, 'test_config.ini')
        code, document = self.run_json('verify', '--config', path)
        self.assertEqual(code, 0)
        self.assertEqual(document['config']['identity'], 'cwbr-y')
        self.assertEqual(document['config']['mode'], 'random_eval')
        code, document = self.run_json('verify', '--config', path,
                                       '--identity', 'wbr')
        self.assertEqual(document['config']['identity'], 'wbr')

    def test_errors(self):
        """[CLI] Test invalid verification input"""
        for argv in (('verify', '--identity', 'nosuch', '--partition', '21'),
                     ('verify', '--partition', '21', '--n', '3'),
                     ('verify',),
                     ('verify', '--partition', '12'),
                     ('verify', '--identity', 'wbr', '--partition', '21',
                      '--complement')):
            code, output = self.run_command(*argv)
            self.assertEqual(code, 2, argv)
            self.assertEqual(output, '')
        self.assertIn('Error: ', self.stderr.getvalue())


class BijectionTestCase(CommandLineTestCase):

    def test_round_trips(self):
        """[CLI] Test bijection round trips"""
        code, output = self.run_command('bijection', '--partition', '1')
        self.assertEqual(code, 0)
        self.assertIn('Passed 2/2', output)
        code, document = self.run_json('bijection', '--partition', '22',
                                       '--exhaustive')
        self.assertEqual(code, 0)
        result = document['results'][0]
        self.assertEqual((result['total'], result['images'],
                          result['codomain']), (72, 72, 72))

    def test_variant(self):
        """[CLI] Test bijection round trips of a variant"""
        code, document = self.run_json('bijection', '--partition', '21',
                                       '--variant', 'y', '--exhaustive')
        self.assertEqual(code, 0)
        self.assertEqual(document['results'][0]['variant'], 'y')

    def test_demo(self):
        """[CLI] Test replay of the worked example"""
        code, document = self.run_json('bijection', '--demo', '988666542')
        self.assertEqual(code, 0)
        result = document['results'][0]
        self.assertEqual(result['walk'], [[1, 1], [4, 1], [4, 3], [4, 5],
                                          [7, 5], [7, 6]])
        self.assertTrue(result['image'].startswith('corner 7 6\n'))
        code, output = self.run_command('bijection', '--demo', '988666542')
        self.assertIn('(1,1) -> (4,1) -> (4,3)', output)

    def test_errors(self):
        """[CLI] Test invalid bijection input"""
        self.assertEqual(self.run_command('bijection', '--demo', '322')[0],
                         2)
        self.assertEqual(self.run_command('bijection')[0], 2)
        self.assertEqual(self.run_command('bijection', '--partition', '1',
                                          '--variant', 'z')[0], 2)


class WalkTestCase(CommandLineTestCase):

    def test_uniform(self):
        """[CLI] Test hook walk estimates with unit weights"""
        code, document = self.run_json('walk', '--partition', '322',
                                       '--region', 'R1', '--uniform',
                                       '--trials', '20000', '--seed', '7')
        self.assertEqual(code, 0)
        results = dict((tuple(r['terminal']), r)
                       for r in document['results'])
        self.assertEqual(results[(1, 3)]['exact'], '5/21')
        self.assertEqual(results[(3, 2)]['exact'], '16/21')
        self.assertTrue(all(r['pass'] for r in document['results']))

    def test_weights_file(self):
        """[CLI] Test hook walk estimates with weights from file"""
        path = os.path.join(self._tmpdir, 'weights.yaml')
        with open(path, 'w') as wfile:
            wfile.write('x: {1: 1, 2: 1}\ny: {1: 1, 2: 1}\n')
        code, document = self.run_json('walk', '--partition', '1',
                                       '--region', 'R8', '--weights', path,
                                       '--trials', '2000', '--seed', '1')
        self.assertEqual(code, 0)
        self.assertEqual([r['exact'] for r in document['results']],
                         ['1/2', '1/2'])

    def test_run_file(self):
        """[CLI] Test hook walk parameters read from run file"""
        code, output = self.run_command(
            'walk', '--config', os.path.join(TESTS_PATH, 'test_config.ini')
        )
        self.assertEqual(code, 0)
        self.assertIn('Hook walks on 1 started in R8, 2000 trials', output)

    def test_errors(self):
        """[CLI] Test invalid hook walk input"""
        path = os.path.join(self._tmpdir, 'weights.yaml')
        with open(path, 'w') as wfile:
            wfile.write('x: {1: 1}\ny: {1: 1}\n')
        for argv in (('walk', '--partition', '1', '--uniform',
                      '--weights', path),
                     ('walk', '--partition', '22', '--region', 'R5',
                      '--uniform'),
                     ('walk', '--partition', '1', '--region', 'R11'),
                     ('walk', '--region', 'R1'),
                     ('walk', '--partition', '1', '--trials', '0')):
            self.assertEqual(self.run_command(*argv)[0], 2, argv)

    def test_weights_required(self):
        """[CLI] Test hook walks without unit weights or weights file"""
        code, output = self.run_command('walk', '--partition', '322',
                                        '--region', 'R1')
        self.assertEqual(code, 2)
        self.assertEqual(output, '')
        self.assertIn('Either --uniform or --weights has to be given.',
                      self.stderr.getvalue())


class StatsTestCase(CommandLineTestCase):

    def test_content(self):
        """[CLI] Test content statistics"""
        code, document = self.run_json('stats', '--partition', '322',
                                       '--content')
        self.assertEqual(code, 0)
        syt, content = document['results']
        self.assertEqual(syt['value'], 21)
        self.assertEqual(content['mean'], '0')
        self.assertEqual(content['variance'], '7')
        self.assertEqual([r['count'] for r in content['table']],
                         [56, 42, 70])

    def test_recursions(self):
        """[CLI] Test recursion checks"""
        code, output = self.run_command('stats', '--partition', '322',
                                        '--recursions')
        self.assertEqual(code, 0)
        self.assertIn('f^322 = 21', output)
        self.assertIn('[R6]', output)
        code, output = self.run_command('stats', '--partition', '22',
                                        '--recursions')
        self.assertEqual(code, 0)
        self.assertIn('SKIP', output)

    def test_sum_squares(self):
        """[CLI] Test sum of squares check"""
        code, document = self.run_json('stats', '--sum-squares', '--n', '8')
        self.assertEqual(code, 0)
        self.assertEqual(document['results'][0]['value'], 40320)

    def test_errors(self):
        """[CLI] Test invalid statistics input"""
        self.assertEqual(self.run_command('stats')[0], 2)
        self.assertEqual(self.run_command('stats', '--content')[0], 2)
        self.assertEqual(self.run_command('stats', '--sum-squares')[0], 2)


class MainTestCase(CommandLineTestCase):

    def test_arguments(self):
        """[CLI] Test argument parsing errors"""
        self.assertEqual(self.run_command('nosuch')[0], 2)
        self.assertEqual(self.run_command()[0], 2)
        self.assertEqual(self.run_command('stats', '--format', 'xml')[0], 2)

    def test_reporter(self):
        """[CLI] Test status reporting callback"""
        calls = []

        def reporter(unit_type, unit_name, unit_status, stream=None):
            calls.append((unit_type, unit_name, unit_status))

        stream = io.StringIO()
        code = main.main('stats', overrides={'partition': '21'},
                         reporter=reporter, stream=stream)
        self.assertEqual(code, 0)
        self.assertEqual(calls, [('stats', 'summary', 'PASS')])
        self.assertIn('f^21 = 2', stream.getvalue())

    def test_simple_reporter(self):
        """[CLI] Test default status reporter"""
        stream = io.StringIO()
        main.simple_reporter('walk', 'sum_squares', 'FAIL', stream=stream)
        self.assertEqual(stream.getvalue(), '[walk] Sum squares: FAIL\n')

    def test_log_file(self):
        """[CLI] Test logging to file"""
        path = os.path.join(self._tmpdir, 'branchrule.log')
        code, output = self.run_command('verify', '--partition', '21',
                                        '--log-file', path)
        self.assertEqual(code, 0)
        with open(path) as logfile:
            self.assertIn('[INFO]: Verified cwbr for 1 partitions',
                          logfile.read())


def golden(name):
    with open(os.path.join(GOLDEN_PATH, name)) as gfile:
        return gfile.read()


class GoldenOutputTestCase(CommandLineTestCase):

    def assert_golden(self, name, *argv, **kwargs):
        code, output = self.run_command(*argv)
        self.assertEqual(code, kwargs.get('code', 0))
        if kwargs.get('mask'):
            output = ESTIMATE_RE.sub('estimate ?.?????', output)
        self.assertEqual(output, golden(name))

    def test_verify(self):
        """[CLI] Test verification reports against stored output"""
        self.assert_golden('verify_cwbr_3211.txt', 'verify', '--identity',
                           'cwbr', '--partition', '3211')
        self.assert_golden('verify_cwbr_n5.txt', 'verify', '--identity',
                           'cwbr', '--n', '5', '--mode', 'expand')
        self.assert_golden('verify_cwbr_xy_n7.txt', 'verify', '--identity',
                           'cwbr-xy', '--n', '7', '--mode', 'random',
                           '--trials', '16')
        self.assert_golden('verify_cwbr_y_66532_complement.txt', 'verify',
                           '--identity', 'cwbr-y', '--partition', '66532',
                           '--complement')

    def test_verify_error(self):
        """[CLI] Test unknown identity against stored output"""
        self.assert_golden('verify_nosuch.txt', 'verify', '--identity',
                           'nosuch', code=2)
        self.assertEqual(self.stderr.getvalue(), golden('verify_nosuch.err'))

    def test_bijection(self):
        """[CLI] Test bijection reports against stored output"""
        self.assert_golden('bijection_1.txt', 'bijection', '--partition', '1')
        self.assert_golden('bijection_3211_exhaustive.txt', 'bijection',
                           '--partition', '3211', '--exhaustive')
        self.assert_golden('bijection_3211_y_exhaustive.txt', 'bijection',
                           '--partition', '3211', '--variant', 'y',
                           '--exhaustive')
        self.assert_golden('bijection_demo.txt', 'bijection', '--demo',
                           '988666542')

    def test_walk(self):
        """[CLI] Test hook walk report against stored output"""
        self.assert_golden('walk_322_R1.txt', 'walk', '--partition', '322',
                           '--region', 'R1', '--uniform', '--trials',
                           '100000', '--seed', '7', mask=True)

    def test_stats(self):
        """[CLI] Test statistics reports against stored output"""
        self.assert_golden('stats_322_content.txt', 'stats', '--partition',
                           '322', '--content')
        self.assert_golden('stats_322_content_recursions.txt', 'stats',
                           '--partition', '322', '--content', '--recursions')
        self.assert_golden('stats_sum_squares_8.txt', 'stats',
                           '--sum-squares', '--n', '8')
        self.assert_golden('stats_sum_squares_10.txt', 'stats',
                           '--sum-squares', '--n', '10')

    def test_stats_json(self):
        """[CLI] Test json statistics documents against stored output"""
        self.assert_golden('stats_322_content.json', 'stats', '--partition',
                           '322', '--content', '--format', 'json')
        self.assert_golden('stats_sum_squares_8.json', 'stats',
                           '--sum-squares', '--n', '8', '--format', 'json')
