# Alternating word monoid and its index poset
