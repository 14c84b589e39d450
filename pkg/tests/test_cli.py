#!/usr/bin/env python

import io
import json
import os
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction
from unittest import main, TestCase

from hlmoments.cli import run
from hlmoments.partitions import EMPTY, enumerate_up_to, interval
from hlmoments.qseries import euler_product

class TestCLI(TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def _run(self, *argv):
        out = io.StringIO()
        err = io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = run(list(argv))
        return code, out.getvalue(), err.getvalue()

    def _write(self, name, data):
        path = os.path.join(self.tmp.name, name)
        with open(path, 'w') as f:
            json.dump(data, f)
        return path

    def _mixture_moments(self):
        dist = self._write('dist.json', {
            'p': 2, 'entries': [{'partition': [], 'value': '1/2'},
                                {'partition': [1], 'value': '1/2'}]})
        path = os.path.join(self.tmp.name, 'moments.json')
        code, _, _ = self._run('moments', '--distribution', dist, '--output', path)
        assert code == 0
        return path

    def test_sur_count(self):
        assert self._run('sur-count', '--lambda', '[1,1]', '--mu', '[1]',
                         '--p', '2') == (0, '3\n', '')
        code, out, _ = self._run('sur-count', '--lambda', '[2,1]', '--mu', '[1,1]',
                                 '--p', '3', '--brute')
        assert code == 0 and out == '48\n'

    def test_partitions(self):
        assert self._run('partitions', '--max-size', '8', '--count')[1] == '67\n'
        assert self._run('partitions', '--conjugate', '[5,2,2,1]')[1] == \
            '(4, 3, 1, 1, 1)\n'
        assert self._run('partitions', '--interlacing', '[1]', '--cap', '2')[1] == \
            '(2)\n(1)\n(2, 1)\n(1, 1)\n'
        assert self._run('partitions', '--interlacing', '[1,1]', '--cap', '1')[0] == 1

    def test_moments(self):
        path = self._mixture_moments()
        with open(path) as f:
            data = json.load(f)
        assert data['p'] == 2
        assert {tuple(e['partition']): e['value'] for e in data['entries']} == \
            {(): '1/1', (1,): '1/2'}
        assert {tuple(e['partition']): e['value'] for e in data['support']} == \
            {(): '1/2', (1,): '1/2'}

    def test_invert(self):
        path = self._mixture_moments()
        assert self._run('invert', '--moments', path, '--nu', '[1]') == \
            (0, '1/2\n', '')
        code, out, _ = self._run('invert', '--moments', path, '--diagnostics')
        result = json.loads(out)
        assert result['value'] == '1/2'
        assert result['diagnostics']['mode'] == 'exact'
        code, out, _ = self._run('invert', '--moments', path, '--all',
                                 '--max-size', '2')
        lines = out.splitlines()
        assert lines[0] == '()\t1/2' and lines[1] == '(1)\t1/2'
        assert lines[-1] == 'total\t1/1'

    def test_invert_truncated_moment_file(self):
        dist = self._write('cyclic8.json', {
            'p': 2, 'entries': [{'partition': [3], 'value': '1'}]})
        path = os.path.join(self.tmp.name, 'truncated.json')
        assert self._run('moments', '--distribution', dist, '--max-size', '2',
                         '--output', path)[0] == 0
        assert self._run('invert', '--moments', path, '--nu', '[3]') == (0, '1/1\n', '')
        with open(path) as f:
            data = json.load(f)
        del data['support']
        stripped = self._write('stripped.json', data)
        code, out, err = self._run('invert', '--moments', stripped, '--nu', '[3]')
        assert code == 1 and out == '' and err.startswith('error:')

    def test_invert_constant_moments(self):
        code, out, _ = self._run('invert', '--constant-moments', '1', '--p', '2',
                                 '--cap', '40')
        assert code == 0
        value = Fraction(out.strip())
        assert abs(value - euler_product(Fraction(1, 2), 100)) < Fraction(1, 10**9)
        code, out, _ = self._run('invert', '--constant-moments', '1', '--p', '2',
                                 '--cap', '40', '--decimal', '6')
        assert out.strip().endswith('(~0.288788 at 6 digits)')

    def test_nonconvergence(self):
        code, out, err = self._run('invert', '--constant-moments', '1', '--p', '2',
                                   '--mode', 'adaptive', '--max-cap', '3')
        assert code == 2
        assert json.loads(out)['diagnostics']['converged'] is False
        assert err.startswith('error:')

    def test_invalid_input(self):
        assert self._run('invert', '--constant-moments', '1')[0] == 1
        assert self._run('invert', '--constant-moments', '1', '--p', '2',
                         '--nu', '[1,2]', '--cap', '3')[0] == 1
        assert self._run('invert', '--constant-moments', '1', '--p', '2',
                         '--mode', 'cap')[0] == 1
        code, _, err = self._run('invert', '--constant-moments', '1', '--p', '2',
                                 '--mode', 'adaptive', '--tolerance', '1/0')
        assert code == 1 and err.startswith('error:')
        assert self._run('frobnicate')[0] == 1
        assert self._run('invert', '--moments',
                         os.path.join(self.tmp.name, 'missing.json'))[0] == 1

    def test_fixed_level_and_multi(self):
        dist = self._write('cyclic.json', {
            'p': 3, 'entries': [{'partition': [2], 'value': '1'}]})
        path = os.path.join(self.tmp.name, 'cyclic_moments.json')
        assert self._run('moments', '--distribution', dist, '--output', path)[0] == 0
        assert self._run('invert-fixed-level', '--moments', path, '--nu', '[1]',
                         '--d', '1')[1] == '1/1\n'
        assert self._run('invert-fixed-level', '--moments', path, '--nu', '[2]',
                         '--d', '1')[0] == 1
        multi = self._write('multi.json', {
            'primes': [2, 3],
            'factors': [{'p': 2, 'entries': [{'partition': [], 'value': '1'},
                                             {'partition': [1], 'value': '1'},
                                             {'partition': [2], 'value': '0'},
                                             {'partition': [1, 1], 'value': '0'}]},
                        {'p': 3, 'entries': [{'partition': [], 'value': '1'},
                                             {'partition': [1], 'value': '2'},
                                             {'partition': [2], 'value': '0'},
                                             {'partition': [1, 1], 'value': '0'}]}]})
        assert self._run('invert-multi', '--moments', multi,
                         '--nu', '[[1], [1]]')[1] == '1/1\n'
        assert self._run('invert-multi', '--moments', multi,
                         '--nu', '[[1]]')[0] == 1

    def test_verify(self):
        pairs = sum(len(interval(EMPTY, lam)) for lam in enumerate_up_to(3))
        assert self._run('verify', '--suite', 'hl-cancellation', '--max-size', '3') == \
            (0, 'passed {0}/{0}\n'.format(pairs), '')
        code, out, _ = self._run('verify', '--max-size', '2')
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 5
        assert all(': passed ' in line for line in lines)
        code, out, _ = self._run('verify', '--suite', 'sur-count', '--max-size', '2',
                                 '--table')
        assert code == 0 and 'sur-count' in out

    def test_verify_sur_count_budget(self):
        code, out, _ = self._run('verify', '--suite', 'sur-count', '--max-size', '5',
                                 '--p', '2')
        assert code == 0
        passed, total = out.split()[1].split('/')
        assert passed == total and 'skipped' not in out
        code, out, _ = self._run('verify', '--suite', 'sur-count', '--max-size', '3',
                                 '--budget', '3')
        assert code == 0 and ', skipped ' in out
        assert self._run('sur-count', '--lambda', '[1, 1]', '--mu', '[1, 1]', '--p', '3',
                         '--brute', '--budget', '2')[0] == 1

    def test_simulate(self):
        output = os.path.join(self.tmp.name, 'report.json')
        code, _, _ = self._run('simulate', '--p', '2', '--d', '1', '--n', '2',
                               '--samples', '40', '--seed', '3', '--probe-depth', '2',
                               '--workers', '1', '--output', output)
        assert code == 0
        with open(output) as f:
            report = json.load(f)
        assert report['cap'] == 2
        assert all(row['gap'] == '0/1' for row in report['rows'])
        assert self._run('simulate', '--p', '2')[0] == 1

if __name__ == '__main__':
    main()
