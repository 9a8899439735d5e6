'''
This laboratory checks the exact linear algebra of coideal: fields, matrices,
subspaces and the kernel, quotient and solver routines built on them
@author: coideal developers
'''

# Imports
import unittest
import logging
import sys
from fractions import Fraction
from random import Random

# Test imports
import __init__

# coideal Imports
from coideal.algebra.exactla import (Field, Matrix, Subspace, coequalizer, coidealFieldError, coidealShapeMismatch, coidealSingularMatrix,
                                     equalizer, image, kernel, kron, quotient, solve)


# Setup logger
logger = logging.getLogger()
logger.setLevel(logging.DEBUG)
if not logger.hasHandlers():
    logger.addHandler(logging.StreamHandler(sys.stdout))


def matrix(field, rows):
    return Matrix.from_rows(field, len(rows[0]), [[field.convert(c) for c in row] for row in rows])


def vector(field, values):
    return [field.convert(c) for c in values]


# Test fields
class FieldChecks(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logger.info(f'Starting unittest: {cls.__name__}')

    @classmethod
    def tearDownClass(cls):
        logger.info(f'Ending unittest: {cls.__name__}')

    def testDescriptors(self):
        tests = [
                 ['Q', 0],
                 ['p=2', 2],
                 ['p=7', 7],
                ]
        for t in tests:
            field = Field.parse(t[0])
            logger.debug(f'Field "{t[0]}" has characteristic {field.characteristic}')
            self.assertEqual(field.characteristic, t[1], f'Parsing field descriptor failed for "{t[0]}"')
            self.assertEqual(field.tag, t[0], f'Field tag does not reproduce "{t[0]}"')

    def testInvalidDescriptors(self):
        for descriptor in ['R', 'p=4', 'p=1', 'p=', '', 7]:
            with self.assertRaises(coidealFieldError, msg=f'Field descriptor "{descriptor}" was accepted'):
                Field.parse(descriptor)

    def testConversion(self):
        Q, F7 = Field.rational(), Field.prime(7)
        tests = [
                 [Q, '-3/4', '-3/4'],
                 [Q, Fraction(6, 8), '3/4'],
                 [Q, 5, 5],
                 [Q, '10/5', 2],
                 [F7, '1/2', 4],
                 [F7, -1, 6],
                 [F7, 15, 1],
                ]
        for t in tests:
            field, value, expected = t
            serialized = field.serialize(field.convert(value))
            logger.debug(f'{value!r} in {field.tag} serializes to {serialized!r}')
            self.assertEqual(serialized, expected, f'Converting {value!r} into {field.tag} failed')

    def testInvalidScalars(self):
        F7 = Field.prime(7)
        for value in [True, '1/0', 'one', 1.5]:
            with self.assertRaises(coidealFieldError, msg=f'Scalar {value!r} was accepted'):
                Field.rational().convert(value)
        with self.assertRaises(coidealFieldError, msg='A denominator divisible by p was accepted'):
            F7.convert('1/14')

    def testBox(self):
        self.assertEqual(len(Field.rational().box(2)), 5, 'The rational coefficient box has the wrong size')
        self.assertEqual(len(Field.prime(3).box(2)), 3, 'The box over GF(3) does not hold every residue')


# Test matrices and subspaces
class MatrixChecks(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logger.info(f'Starting unittest: {cls.__name__}')
        cls.Q = Field.rational()
        cls.F7 = Field.prime(7)

    @classmethod
    def tearDownClass(cls):
        logger.info(f'Ending unittest: {cls.__name__}')

    def testKernelOfRankOne(self):
        K = kernel(matrix(self.Q, [[1, 1], [1, 1]]))
        self.assertEqual(K.dim, 1, 'The kernel of [[1,1],[1,1]] is not a line')
        self.assertTrue(K.contains(vector(self.Q, [1, -1])), 'The kernel of [[1,1],[1,1]] misses (1,-1)')
        self.assertFalse(K.contains(vector(self.Q, [1, 1])), 'The kernel of [[1,1],[1,1]] contains (1,1)')

    def testRankNullity(self):
        rng = Random(1)
        for field in [self.Q, self.F7]:
            for _ in range(10):
                rows, cols = rng.randint(1, 5), rng.randint(1, 5)
                f = matrix(field, [[rng.randint(-2, 2) for _ in range(cols)] for _ in range(rows)])
                logger.debug(f'{field.tag}: rank {f.rank()} and nullity {kernel(f).dim} for {rows}x{cols}')
                self.assertEqual(f.rank() + kernel(f).dim, cols, f'Rank and nullity do not add up for {f}')
                self.assertEqual(image(f).dim, f.rank(), f'The image of {f} has the wrong dimension')
                for v in kernel(f).vectors:
                    self.assertTrue(all(c == 0 for c in f.apply(v)), f'A kernel vector of {f} is not annihilated')

    def testInverse(self):
        f = matrix(self.Q, [[2, 1], [1, 1]])
        self.assertEqual(f @ f.inverse(), Matrix.identity(self.Q, 2), 'Inverse of an invertible matrix failed')
        with self.assertRaises(coidealSingularMatrix, msg='A singular matrix was inverted'):
            matrix(self.Q, [[1, 2], [2, 4]]).inverse()
        with self.assertRaises(coidealSingularMatrix, msg='[[1,2],[2,4]] is invertible over GF(7)?'):
            matrix(self.F7, [[1, 2], [2, 4]]).inverse()

    def testShapeMismatch(self):
        with self.assertRaises(coidealShapeMismatch, msg='Multiplying 2x3 by 2x3 succeeded'):
            matrix(self.Q, [[1, 0, 0], [0, 1, 0]]) @ matrix(self.Q, [[1, 0, 0], [0, 1, 0]])
        with self.assertRaises(coidealShapeMismatch, msg='Ragged entries were accepted'):
            Matrix(self.Q, 2, 2, [[self.Q.one]])

    def testKron(self):
        a = matrix(self.Q, [[1, 2], [3, 4]])
        b = Matrix.identity(self.Q, 2)
        k = kron(a, b)
        self.assertEqual(k.shape, (4, 4), 'The Kronecker product has the wrong shape')
        self.assertEqual(k[1, 3], self.Q.convert(2), 'The Kronecker product has a wrong entry')
        self.assertEqual(k[2, 1], self.Q.zero, 'The Kronecker product has a wrong entry')

    def testSubspaceLattice(self):
        Q = self.Q
        U = Subspace.span(Q, 3, [vector(Q, [1, 0, 0]), vector(Q, [0, 1, 0])])
        V = Subspace.span(Q, 3, [vector(Q, [0, 1, 0]), vector(Q, [0, 0, 1])])
        self.assertEqual((U + V).dim, 3, 'The sum of two planes in Q^3 is not everything')
        self.assertEqual(U.intersection(V).dim, 1, 'The intersection of two planes in Q^3 is not a line')
        self.assertTrue(U.intersection(V) <= U, 'The intersection is not contained in its factor')
        same = Subspace.span(Q, 3, [vector(Q, [1, 1, 0]), vector(Q, [1, -1, 0])])
        self.assertEqual(U, same, 'Equal subspaces with different spanning sets compare unequal')
        self.assertEqual(hash(U), hash(same), 'Equal subspaces hash differently')
        self.assertEqual(U.tensor(V).dim, 4, 'The tensor product of two planes is not four-dimensional')

    def testCoordinates(self):
        Q = self.Q
        U = Subspace.span(Q, 3, [vector(Q, [1, 2, 0]), vector(Q, [0, 1, 1])])
        v = vector(Q, [2, 5, 1])
        coordinates = U.coordinates(v)
        self.assertEqual(U.inclusion().apply(coordinates), v, 'Coordinates do not reproduce the vector')
        self.assertEqual(U.extraction() @ U.inclusion(), Matrix.identity(Q, 2), 'Extraction is no retraction of the inclusion')

    def testQuotient(self):
        Q = self.Q
        U = Subspace.span(Q, 3, [vector(Q, [1, 1, 0])])
        projection, section = quotient(3, U)
        self.assertEqual(projection.shape, (2, 3), 'The quotient by a line in Q^3 is not a plane')
        self.assertEqual(projection @ section, Matrix.identity(Q, 2), 'The section does not split the projection')
        self.assertTrue(all(c == 0 for c in projection.apply(vector(Q, [1, 1, 0]))), 'The projection does not kill U')

    def testEqualizers(self):
        Q = self.Q
        f = matrix(Q, [[1, 0], [0, 1]])
        g = matrix(Q, [[1, 0], [0, 0]])
        E = equalizer(f, g)
        self.assertEqual(E.dim, 1, 'The equalizer of id and a projection is not a line')
        self.assertTrue(E.contains(vector(Q, [1, 0])), 'The equalizer misses the fixed axis')
        self.assertEqual(coequalizer(f, g).rows, 1, 'The coequalizer of id and a projection is not a line')

    def testSolve(self):
        Q = self.Q
        f = matrix(Q, [[1, 1], [2, 2]])
        x = solve(f, vector(Q, [3, 6]))
        self.assertIsNotNone(x, 'A consistent system was declared unsolvable')
        self.assertEqual(f.apply(x), vector(Q, [3, 6]), 'The returned solution is wrong')
        self.assertIsNone(solve(f, vector(Q, [1, 0])), 'An inconsistent system was solved')


# Main
if __name__ == '__main__':
    unittest.main()
