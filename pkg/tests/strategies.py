"""Hypothesis strategies shared by the property suites."""

from hypothesis import strategies as st

from chartfold.algebra import Letter, Word


@st.composite
def braid_words(draw, degree: int = 3, max_size: int = 10) -> Word:
    indices = draw(st.lists(st.integers(1, degree - 1), max_size=max_size))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=len(indices), max_size=len(indices)))
    return Word(tuple(Letter(i, s) for i, s in zip(indices, signs)), "braid")


@st.composite
def perm_words(draw, degree: int = 4, max_size: int = 10) -> Word:
    indices = draw(st.lists(st.integers(1, degree - 1), max_size=max_size))
    return Word(tuple(Letter(i) for i in indices), "perm")


@st.composite
def perm_movies(draw, degree: int = 4, max_events: int = 10):
    """Random valid permutation movies built event by event, then emptied."""

    from chartfold.chart import MovieBuilder

    builder = MovieBuilder(degree, "perm")
    for _ in range(draw(st.integers(0, max_events))):
        letters = builder.letters
        options = ["insert", "birth"]
        if letters:
            options.append("delete")
        pairs = [j for j in range(len(letters) - 1) if letters[j] == letters[j + 1]]
        crossings = [
            j for j in range(len(letters) - 1) if abs(letters[j].index - letters[j + 1].index) >= 2
        ]
        whites = [
            j
            for j in range(len(letters) - 2)
            if letters[j] == letters[j + 2] and abs(letters[j].index - letters[j + 1].index) == 1
        ]
        if pairs:
            options.append("death")
        if crossings:
            options.append("crossing")
        if whites:
            options.extend(["white", "white"])
        choice = draw(st.sampled_from(options))
        if choice == "insert":
            slot = draw(st.integers(0, len(letters)))
            builder.insert(slot, Letter(draw(st.integers(1, degree - 1))))
        elif choice == "birth":
            slot = draw(st.integers(0, len(letters)))
            builder.birth(slot, Letter(draw(st.integers(1, degree - 1))))
        elif choice == "delete":
            builder.delete(draw(st.integers(0, len(letters) - 1)))
        elif choice == "death":
            builder.death(draw(st.sampled_from(pairs)))
        elif choice == "crossing":
            builder.crossing(draw(st.sampled_from(crossings)))
        else:
            j = draw(st.sampled_from(whites))
            outer, inner = letters[j], letters[j + 1]
            builder.white(j, (inner, outer, inner))
    while builder.letters:
        builder.delete(0)
    return builder.build()


@st.composite
def color_vectors(draw, min_size: int = 1, max_size: int = 4):
    from chartfold.folding import COLORS, ColorVector

    return ColorVector(tuple(draw(st.lists(st.sampled_from(COLORS), min_size=min_size, max_size=max_size))))
