"""Word filling volumes and Dehn functions of finite presentations.

FV(w) counts the relator applications needed to reduce a trivial word to
nothing; the Dehn function is its supremum over trivial words of bounded
length.  Searches are uniform-cost with explicit caps, and every Exact
answer ships a move-by-move certificate that replays to the empty word.
"""

import fillscope as fs
from fillscope.formats import emit_profile_csv
from fillscope.spaces import builtin_presentation

print("== two presentations of the trivial group ==")
trivial = builtin_presentation("pres-trivial")  # <x | x>
free = builtin_presentation("pres-free")        # <a, b | >, free group
limits = fs.WordSearchLimits(max_word_len=12, max_cost=12)
print("<x|x>:")
print(emit_profile_csv(fs.dehn_function(trivial, 6, limits)))
print("<a,b|> (no trivial words except the empty one):")
print(emit_profile_csv(fs.dehn_function(free, 6, limits)))

print("== Z^2 = <a,b | aba'b'> ==")
z2 = builtin_presentation("pres-z2")
w = z2.word(["a", "a", "b", "a^-1", "a^-1", "b^-1"])
res = fs.filling_volume_word(z2, w, fs.WordSearchLimits(10, 6))
print(f"FV(a^2 b a^-2 b^-1) = {res.value}")
print("certificate:")
u = w
for move in res.certificate:
    nxt = fs.apply_move(z2, u, move)
    print(f"  {u.letters} -> {nxt.letters}")
    u = nxt

print("\n== the homological shadow ==")
chain = fs.abelianized_chain(z2, w)
pc = fs.presentation_complex(z2)
hom = fs.fill_volume(pc, 2, chain)
print(f"abelianized chain: {chain!r}; FVch = {hom.value} <= FV = {res.value}")
