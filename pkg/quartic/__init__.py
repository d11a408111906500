"quartic: prime triples, cyclotomic splitting and the equation x^4 - q^4 = p*y^r"

VERSION = '1.0.0'
