import numpy as np
import pytest

from phonomem import (
    Corpus,
    CorpusError,
    InteractionModel,
    TrainConfig,
    build_inventory,
    count_pairs,
    mean_interaction,
    parse_corpus,
    train,
    verify_decay,
)


def test_count_pairs_hand_case():
    corpus = parse_corpus(["ata"])
    pc = count_pairs(corpus, 2)
    al = corpus.alphabet
    a, t = al.index_of("a"), al.index_of("t")
    expected1 = np.zeros((2, 2))
    assert pc.counts[0][a][t] == 1
    assert pc.counts[0][t][a] == 1
    assert pc.counts[0].sum() == 2
    assert pc.counts[1][a][a] == 1
    assert pc.counts[1].sum() == 1


def test_count_pairs_empty_corpus_zeros():
    al = build_inventory(["ata"])
    pc = count_pairs(Corpus(al, ()), 3)
    assert pc.counts.shape == (3, 2, 2)
    assert pc.counts.sum() == 0


@pytest.mark.parametrize("name", ["latin", "turkish"])
def test_count_pairs_mass_invariant(name, request):
    corpus = request.getfixturevalue(name)
    pc = count_pairs(corpus, 3)
    for r in (1, 2, 3):
        # independent per-word counter
        expected = sum(max(0, len(w) - r) for w in corpus.words)
        assert pc.total(r) == expected


def test_count_pairs_rejects_bad_range(latin):
    with pytest.raises(ValueError):
        count_pairs(latin, 0)


def test_train_single_step_equals_counts():
    corpus = parse_corpus(["ata"])
    m = train(corpus, TrainConfig(eta=1.0, timesteps=1), r_max=3)
    al = corpus.alphabet
    a, t = al.index_of("a"), al.index_of("t")
    assert m.g[0][a][t] == 1.0
    assert m.g[0][t][a] == 1.0
    assert m.g[0][a][a] == 0.0 and m.g[0][t][t] == 0.0
    # the rank-2 pair (a, a) is also a count; rank 3 has no pairs in a 3-sound word
    assert m.g[1][a][a] == 1.0
    assert m.g[2].sum() == 0.0


def test_train_zero_steps_fills_g_init():
    corpus = parse_corpus(["ata"])
    m = train(corpus, TrainConfig(timesteps=0, g_init=0.25))
    assert np.all(m.g == 0.25)


def test_train_closed_form_on_corpora(latin, turkish):
    for corpus in (latin, turkish):
        cfg = TrainConfig()
        m = train(corpus, cfg)
        expected = cfg.g_init + cfg.eta * cfg.timesteps * count_pairs(corpus, 3).counts
        assert np.max(np.abs(m.g - expected)) <= 1e-9


def test_train_deterministic(latin):
    a = train(latin)
    b = train(latin)
    assert np.array_equal(a.g, b.g)
    assert a.meta == b.meta


def test_train_monotone_in_corpus(latin):
    small = Corpus(latin.alphabet, latin.words[:20], source="subset")
    large = Corpus(latin.alphabet, latin.words[:21], source="subset+1")
    g_small = train(small).g
    g_large = train(large).g
    assert np.all(g_large >= g_small)


def test_train_empty_corpus_errors(latin):
    with pytest.raises(CorpusError, match="empty corpus"):
        train(Corpus(latin.alphabet, ()))


def test_train_records_meta(latin):
    m = train(latin)
    meta = m.meta
    assert meta["corpus"]["num_words"] == 35
    assert meta["corpus"]["d"] == 18
    assert meta["corpus"]["sha256"] == latin.sha256()
    assert meta["corpus"]["words"][0] == "insula"
    assert meta["train"]["timesteps"] == 10_000


def test_train_normalized_mode(latin):
    cfg = TrainConfig(normalize="per-range-sum")
    m = train(latin, cfg)
    d = latin.alphabet.d
    counts = count_pairs(latin, 3).counts
    for r in range(3):
        assert m.g[r].sum() == pytest.approx(d * d, rel=1e-9)
        # entries stay proportional to counts within each range
        scale = d * d / counts[r].sum()
        assert np.allclose(m.g[r], counts[r] * scale, rtol=1e-9)


def test_train_config_validation():
    with pytest.raises(ValueError):
        TrainConfig(eta=0.0)
    with pytest.raises(ValueError):
        TrainConfig(timesteps=-1)
    with pytest.raises(ValueError):
        TrainConfig(normalize="per-word")
    with pytest.raises(ValueError):
        TrainConfig(g_init=-1.0)


def test_verify_decay_trivial_and_violating(latin):
    al = latin.alphabet
    zero = InteractionModel.untrained(al)
    assert verify_decay(zero)
    g = np.zeros((2, al.d, al.d))
    g[1] += 1.0  # mean(2) > mean(1)
    violating = InteractionModel(al, 2, 1.0, g)
    assert not verify_decay(violating)


def test_verify_decay_after_training(latin, turkish, latin_model, turkish_model):
    assert verify_decay(latin_model)
    assert verify_decay(turkish_model)
    # strict decrease whenever every word is longer than r_max
    long_words = tuple(w for w in latin.words if len(w) > 4)
    m = train(Corpus(latin.alphabet, long_words, source="long"))
    means = [mean_interaction(m, r) for r in (1, 2, 3)]
    assert means[0] > means[1] > means[2]
