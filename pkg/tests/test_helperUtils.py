import unittest 
from toric_pseudoindex.helperUtils import generate_zero_based_index, make_label, parse_int_list, parse_int_matrix
 
class TestHelperUtils(unittest.TestCase): 
    def test_zero_based_index(self): 
        self.assertEqual(generate_zero_based_index(5), "05") 
        self.assertEqual(generate_zero_based_index(123), "123") 

    def test_make_label(self): 
        self.assertEqual(make_label("family", a=5, d=1, r=4, s=2), "family/a=05,d=01,r=04,s=02") 
        self.assertLess(make_label("prop1", m=9), make_label("prop1", m=10)) 
 
    def test_parse_int_list(self): 
        self.assertEqual(parse_int_list("1, 2,-3"), [1, 2, -3]) 
        for bad in ("", "1,,2", "a"): 
            with self.assertRaises(ValueError): 
                parse_int_list(bad) 

    def test_parse_int_matrix(self): 
        self.assertEqual(parse_int_matrix("0,0;1,1"), [[0, 0], [1, 1]]) 
 
if __name__ == "__main__": 
    unittest.main() 
