import os
import json
import tempfile
import unittest
import pandas as pd
from core.exceptions import ParameterError
from lib.exponents.region import region_scan, parse_fixed, render

EQUAL_EXPONENTS = {'r1': 't1', 'r2': 't2', 't1': '*', 't2': '*'}
TARGET_PLANE = {'p': '*', 't2': '*', 'r1': 't1', 'r2': 't2'}


class TestRegionScan(unittest.TestCase):

    def test_equal_exponent_plane(self):
        toft = region_scan('toft', EQUAL_EXPONENTS, k=64)
        pseudo = region_scan('pseudo', EQUAL_EXPONENTS, k=64)
        self.assertEqual(toft.axes, ('p', 'q'))
        self.assertEqual(toft.admissible.shape, (65, 65))
        self.assertEqual(toft.count, 33)
        self.assertEqual(pseudo.count, 1617)
        self.assertTrue(pseudo.contains(toft))
        self.assertFalse(toft.contains(pseudo))

    def test_target_plane_coincides(self):
        toft = region_scan('toft', TARGET_PLANE, k=64)
        pseudo = region_scan('pseudo', TARGET_PLANE, k=64)
        self.assertEqual(toft.axes, ('q', 't1'))
        self.assertEqual(toft.count, 1089)
        self.assertTrue((toft.admissible == pseudo.admissible).all())

    def test_fixed_constants(self):
        region = region_scan('pseudo', {'p': '0', 'q': '1', 'r1': '1/2', 'r2': '1/2'}, k=4)
        self.assertEqual(region.axes, ('t1', 't2'))
        self.assertTrue(region.admissible[2, 2])
        self.assertTrue(region.admissible[0, 0])

    def test_errors(self):
        with self.assertRaises(ParameterError):
            region_scan('pseudo', {'p': '*'}, k=4)
        with self.assertRaises(ParameterError):
            region_scan('pseudo', {'p': '1/3', 'q': '*', 'r1': '*', 'r2': '*'}, k=4)
        with self.assertRaises(ParameterError):
            region_scan('pseudo', {'s': '*', 'q': '*', 'r1': '*', 'r2': '*'}, k=4)
        with self.assertRaises(ParameterError):
            region_scan('pseudo', EQUAL_EXPONENTS, k=0)

    def test_outputs(self):
        region = region_scan('toft', EQUAL_EXPONENTS, k=8)
        with tempfile.TemporaryDirectory() as tmp:
            region.to_csv(os.path.join(tmp, 'region.csv'))
            region.to_json(os.path.join(tmp, 'region.json'))
            region.to_dat(os.path.join(tmp, 'region.dat'))
            frame = pd.read_csv(os.path.join(tmp, 'region.csv'))
            with open(os.path.join(tmp, 'region.json')) as f:
                summary = json.load(f)
        self.assertEqual(len(frame), 81)
        self.assertEqual(list(frame.columns), ['coord1', 'coord2', 'admissible'])
        self.assertEqual(int(frame['admissible'].sum()), region.count)
        self.assertEqual(summary['admissible'], region.count)
        self.assertEqual(summary['axes'], ['p', 'q'])


class TestHelpers(unittest.TestCase):

    def test_parse_fixed(self):
        self.assertEqual(parse_fixed('r1=t1, t1=*, p=1/2'), {'r1': 't1', 't1': '*', 'p': '1/2'})
        self.assertEqual(parse_fixed(''), {})
        with self.assertRaises(ParameterError):
            parse_fixed('r1')

    def test_render(self):
        self.assertEqual(render(32, 64), '1/2')
        self.assertEqual(render(0, 4), '0/1')
        self.assertEqual(render(4, 4), '1/1')


if __name__ == '__main__':
    unittest.main()
