"""
Weak order, Bruhat order, and the sorting orders in between
===========================================================

For each reduced word Q of w, the greedy sorting subwords induce an
order on the Bruhat interval [e, w].  Every such order is sandwiched
between the right weak order and the Bruhat order, the intersection of
all of them recovers weak order, and their union recovers Bruhat order.
"""

from coxsort import CoxeterSystem, word_str
from coxsort.hecke import reduced_words, sorting_subword
from coxsort.posets import (bruhat_interval, relation_intersection,
                            relation_union, sorting_order, weak_interval)

b2 = CoxeterSystem.type_b(2)
w0 = b2.longest_element()
words = sorted(reduced_words(w0))
print("reduced words of the B2 longest element:", [word_str(Q) for Q in words])

# the sorting subword of u: the greedy leftmost reduced subword of Q
for Q in words:
    print(f"\nsorting subwords inside Q = {word_str(Q)}:")
    for u in bruhat_interval(b2.identity, w0).ground:
        positions = sorting_subword(b2, Q, u)
        print(f"  {word_str(u.word):>8}  <-  positions {list(positions)}")

# cover relations of the three kinds of order
weak = weak_interval(w0)
bruhat = bruhat_interval(b2.identity, w0)
print("\nweak covers:  ", len(weak.covers()))
print("bruhat covers:", len(bruhat.covers()))
for Q in words:
    print(f"sorting covers for {word_str(Q)}:", len(sorting_order(b2, Q).covers()))

# intersection = weak, union = bruhat (on the shared ground [e, w0])
ground = bruhat.ground
sortings = [sorting_order(b2, Q) for Q in words]
meet = relation_intersection(sortings)
join = relation_union(sortings)
print("\nintersection of sorting orders == weak order:",
      meet == weak.restrict(ground))
print("union is already transitive:", join.is_transitive)
print("union of sorting orders == bruhat order:", join.as_poset() == bruhat)

# a smaller interval where the sorting order is genuinely new: w = s2s1s2
w = b2.element((2, 1, 2))
sort = sorting_order(b2, (2, 1, 2))
print(f"\non [e, {word_str(w.word)}] the sorting order has",
      len(sort.covers()), "covers; bruhat there has",
      len(bruhat_interval(b2.identity, w).covers()))
