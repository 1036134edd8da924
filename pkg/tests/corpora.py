"""Frozen sentence collections and expected outputs shared across tests.

The logical-form strings were derived once from the tree oracle, hand-checked
against the documented output layout, and frozen; decoder tests must hit them
verbatim, oracle tests guard against drift.
"""

# 21 training-style sentences covering 37 of the 52 grammar expansions.
NONSENSE_21 = [
    "A rose was helped by a dog",
    "The sailor dusted a boy",
    "Emma rolled a teacher",
    "Evelyn rolled the girl",
    "A cake was forwarded to Levi by Charlotte",
    "The captain ate",
    "The girl needed to cook",
    "A cake rolled",
    "The cookie was passed to Emma",
    "Emma ate the ring beside a bed",
    "A horse gave the cake beside a table to the mouse",
    "Amelia gave Emma a strawberry",
    "A cat disintegrated a girl",
    "Eleanor sold Evelyn the cake",
    "The book was lended to Benjamin by a cat",
    "The cake was frozen by the giraffe",
    "The donut was studied",
    "Isabella forwarded a box on a tree to Emma",
    "A cake was stabbed by Scarlett",
    "A pencil was fed to Liam by the deer",
    "The cake was eaten by Olivia",
]

# 19 hand-picked sentences covering every expansion except pp modification
# and clause embedding (48 of 52).
HANDPICKED_19 = [
    "the girl was painted",
    "a boy painted",
    "a boy painted the girl",
    "the girl was painted by a boy",
    "a boy respected the girl",
    "the girl was respected",
    "the girl was respected by a boy",
    "the boy grew the flower",
    "the flower was grown",
    "the flower was grown by a boy",
    "the scientist wanted to read",
    "the guest smiled",
    "the flower grew",
    "ella sold a car to the customer",
    "ella sold a customer a car",
    "the customer was sold a car",
    "the customer was sold a car by ella",
    "the car was sold to the customer by ella",
    "the car was sold to the customer",
]

HANDPICKED_MISSING_4 = {
    "<np> -> <np_pp>",
    "<np_pp> -> <np_det> <pp> <np>",
    "<vp_external5> -> <v_cp_taking> <that> <start>",
    "<vp_external> -> <vp_external5>",
}

# Two sentences that close the remaining gap.
CLOSING_2 = [
    "a boy painted the girl in a house",
    "the girl noticed that a boy painted the girl",
]

# sentence -> logical form, decoder and oracle must both produce exactly this
GOLDEN = {
    "a boy painted the girl":
        "boy ( 1 ) ; * girl ( 4 ) ; paint ( 2 ) AND agent ( 2 , 1 ) AND theme ( 2 , 4 )",
    "the girl was painted by a boy":
        "* girl ( 1 ) ; boy ( 6 ) ; paint ( 3 ) AND theme ( 3 , 1 ) AND agent ( 3 , 6 )",
    "a boy beside the tree painted the cake":
        "boy ( 1 ) ; * tree ( 4 ) ; * cake ( 7 ) ; nmod . beside ( 1 , 4 ) "
        "AND paint ( 5 ) AND agent ( 5 , 1 ) AND theme ( 5 , 7 )",
    "the scientist wanted to read":
        "* scientist ( 1 ) ; want ( 2 ) AND agent ( 2 , 1 ) AND xcomp ( 2 , 4 ) "
        "AND read ( 4 ) AND agent ( 4 , 1 )",
    "the girl noticed that a boy painted the girl":
        "* girl ( 1 ) ; boy ( 5 ) ; * girl ( 8 ) ; notice ( 2 ) AND agent ( 2 , 1 ) "
        "AND ccomp ( 2 , 6 ) AND paint ( 6 ) AND agent ( 6 , 5 ) AND theme ( 6 , 8 )",
    "ella sold a customer a car":
        "ella ( 0 ) ; customer ( 3 ) ; car ( 5 ) ; sell ( 1 ) AND agent ( 1 , 0 ) "
        "AND recipient ( 1 , 3 ) AND theme ( 1 , 5 )",
    "the customer was sold a car by ella":
        "* customer ( 1 ) ; car ( 5 ) ; ella ( 7 ) ; sell ( 3 ) AND recipient ( 3 , 1 ) "
        "AND theme ( 3 , 5 ) AND agent ( 3 , 7 )",
    "a cake was forwarded to levi by charlotte":
        "cake ( 1 ) ; levi ( 5 ) ; charlotte ( 7 ) ; forward ( 3 ) AND theme ( 3 , 1 ) "
        "AND recipient ( 3 , 5 ) AND agent ( 3 , 7 )",
    "emma was given a strawberry .":
        "emma ( 0 ) ; strawberry ( 4 ) ; give ( 2 ) AND recipient ( 2 , 0 ) "
        "AND theme ( 2 , 4 )",
    "the captain ate .":
        "* captain ( 1 ) ; eat ( 2 ) AND agent ( 2 , 1 )",
    "emma liked that the cake was eaten .":
        "emma ( 0 ) ; * cake ( 4 ) ; like ( 1 ) AND agent ( 1 , 0 ) AND ccomp ( 1 , 6 ) "
        "AND eat ( 6 ) AND theme ( 6 , 4 )",
    "a horse gave the cake beside a table to the mouse":
        "horse ( 1 ) ; * cake ( 4 ) ; table ( 7 ) ; * mouse ( 10 ) ; give ( 2 ) "
        "AND agent ( 2 , 1 ) AND theme ( 2 , 4 ) AND recipient ( 2 , 10 ) "
        "AND nmod . beside ( 4 , 7 )",
}

# the double-object dative whose pp moves from theme to recipient
AUGMENT_BEFORE = (
    "liam gave the monkey a chalk in the container .",
    "liam ( 0 ) ; * monkey ( 3 ) ; chalk ( 5 ) ; * container ( 8 ) ; give ( 1 ) "
    "AND agent ( 1 , 0 ) AND recipient ( 1 , 3 ) AND theme ( 1 , 5 ) "
    "AND nmod . in ( 5 , 8 )",
)
AUGMENT_AFTER = (
    "liam gave the monkey in the container a chalk .",
    "liam ( 0 ) ; * monkey ( 3 ) ; * container ( 6 ) ; chalk ( 8 ) ; give ( 1 ) "
    "AND agent ( 1 , 0 ) AND recipient ( 1 , 3 ) AND theme ( 1 , 8 ) "
    "AND nmod . in ( 3 , 6 )",
)

# clean vs pp-filter-ablated decodes of attraction-prone sentences
ATTRACTION_CASES = [
    (
        "the baby beside the valve smiled .",
        "* baby ( 1 ) ; * valve ( 4 ) ; nmod . beside ( 1 , 4 ) AND smile ( 5 ) AND agent ( 5 , 1 )",
        "* baby ( 1 ) ; * valve ( 4 ) ; nmod . beside ( 1 , 4 ) AND smile ( 5 ) AND agent ( 5 , 4 )",
        4,
    ),
    (
        "the girl beside the stool beside the table smiled .",
        "* girl ( 1 ) ; * stool ( 4 ) ; * table ( 7 ) ; nmod . beside ( 1 , 4 ) "
        "AND nmod . beside ( 4 , 7 ) AND smile ( 8 ) AND agent ( 8 , 1 )",
        "* girl ( 1 ) ; * stool ( 4 ) ; * table ( 7 ) ; nmod . beside ( 1 , 4 ) "
        "AND nmod . beside ( 4 , 7 ) AND smile ( 8 ) AND agent ( 8 , 7 )",
        7,
    ),
]
