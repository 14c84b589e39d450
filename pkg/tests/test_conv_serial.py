#!/usr/bin/env python

import json
import os
import tempfile
from fractions import Fraction
from unittest import main, TestCase

import deepdiff

from hlmoments.conv.serial import (SchemaError, moment_table_to_json,
                                   moment_table_from_json, distribution_to_json,
                                   distribution_from_json, diagnostics_to_json,
                                   load_json)
from hlmoments.inversion import (Distribution, MomentTable, MultiMomentTable,
                                 tensor_moments, invert, invert_multi,
                                 moments_from_distribution,
                                 moments_from_multi_distribution)
from hlmoments.partitions import enumerate_up_to

match = lambda a, b: False if deepdiff.DeepDiff(a, b) else True

class TestSerial(TestCase):
    def test_moment_table(self):
        M = MomentTable(3, {(1,): Fraction(1, 2), (): 1})
        data = moment_table_to_json(M)
        assert match(data, {'p': 3, 'entries': [
            {'partition': [], 'value': '1/1'},
            {'partition': [1], 'value': '1/2'}]})
        N = moment_table_from_json(json.loads(json.dumps(data)))
        assert N.p == 3 and N.entries == M.entries

    def test_multi_tables(self):
        M = MultiMomentTable([2, 3], {((), (1,)): 2})
        data = moment_table_to_json(M)
        assert match(data, {'primes': [2, 3], 'entries': [
            {'partitions': [[], [1]], 'value': '2/1'}]})
        assert moment_table_from_json(data).entries == M.entries
        T = tensor_moments([MomentTable(2, {(): 1}), MomentTable(3, {(): 1})])
        U = moment_table_from_json(moment_table_to_json(T))
        assert [f.p for f in U.factors] == [2, 3]

    def test_support_round_trip(self):
        M = moments_from_distribution({(3,): 1}, 2, enumerate_up_to(2))
        data = json.loads(json.dumps(moment_table_to_json(M)))
        assert match(data['support'], [{'partition': [3], 'value': '1/1'}])
        N = moment_table_from_json(data)
        assert N.support == M.support
        assert invert(N, (3,))[0] == 1
        data['entries'][1]['value'] = '5/1'
        self.assertRaises(SchemaError, moment_table_from_json, data)
        D = moments_from_multi_distribution({((1,), (1,)): 1}, [2, 3], [((), ())])
        E = moment_table_from_json(moment_table_to_json(D))
        assert invert_multi(E, [(1,), (1,)])[0] == 1

    def test_distribution(self):
        dist = Distribution({(2,): Fraction(1, 3), (): Fraction(2, 3)})
        data = distribution_to_json(dist, p=5)
        assert data['p'] == 5
        assert [e['partition'] for e in data['entries']] == [[], [2]]
        parsed, p = distribution_from_json(data)
        assert parsed == dist and p == 5
        multi = Distribution({((1,), ()): 1})
        parsed, primes = distribution_from_json(
            dict(distribution_to_json(multi), primes=[2, 3]))
        assert parsed == multi and primes == [2, 3]

    def test_schema_errors(self):
        self.assertRaises(SchemaError, moment_table_from_json, {'entries': []})
        self.assertRaises(SchemaError, moment_table_from_json,
                          {'p': 2, 'entries': [{'partition': []}]})
        self.assertRaises(SchemaError, moment_table_from_json,
                          {'p': 2, 'entries': [{'partition': [], 'value': '1'},
                                               {'partition': [], 'value': '2'}]})

    def test_diagnostics(self):
        M = MomentTable(3, {(): 1, (1,): 1, (1, 1): 0})
        _, diagnostics = invert(M, ())
        data = diagnostics_to_json(diagnostics)
        assert data['partial_sums'] == ['1/1', '1/2']
        assert data['mode'] == 'exact' and data['cap'] == 1
        json.dumps(data)

    def test_load_json(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, 'm.json')
            with open(path, 'w') as f:
                f.write('{"p": 2')
            self.assertRaises(SchemaError, load_json, path)
            with open(path, 'w') as f:
                f.write('{"p": 2, "entries": []}')
            assert load_json(path) == {'p': 2, 'entries': []}

if __name__ == '__main__':
    main()
