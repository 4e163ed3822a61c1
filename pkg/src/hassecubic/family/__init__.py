"""The explicit genus-one family and its verification registry."""
