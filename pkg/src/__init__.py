"""Sextics - fibrés aCM de rang 2 sur la variété de drapeaux F et sur P2 x P2."""
