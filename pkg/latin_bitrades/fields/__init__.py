"""
Finite fields and the Mersenne and orthomorphism trade factories.
"""
