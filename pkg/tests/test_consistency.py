import math

import numpy as np
import pytest

from taletailor.images.consistency import (
    ClassDistribution,
    consistency,
    load_class_distributions,
    rank_stories_by_consistency,
)


def dist(image_id, probs):
    return ClassDistribution(image_id, np.asarray(probs, dtype=np.float64))


class TestConsistency:
    def test_identical_distributions_score_zero(self):
        d = dist("a", [0.3, 0.7])
        assert consistency([d, d, d]) == 0.0

    def test_symmetric_pair_hand_value(self):
        value = consistency([dist("a", [0.9, 0.1]), dist("b", [0.1, 0.9])])
        assert value == pytest.approx(2 * 0.8 * math.log(9), abs=1e-9)
        assert value == pytest.approx(3.516, abs=5e-4)

    def test_fewer_than_two_images_is_zero(self):
        assert consistency([]) == 0.0
        assert consistency([dist("a", [1.0])]) == 0.0

    def test_taxonomy_mismatch_raises(self):
        with pytest.raises(ValueError):
            consistency([dist("a", [1.0]), dist("b", [0.5, 0.5])])

    def test_duplicate_image_never_decreases_score(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            dists = [dist(f"i{j}", rng.dirichlet(np.ones(5))) for j in range(3)]
            base = consistency(dists)
            assert consistency(dists + [dists[0]]) >= base - 1e-12

    def test_permutation_invariant(self):
        rng = np.random.default_rng(5)
        dists = [dist(f"i{j}", rng.dirichlet(np.ones(4))) for j in range(4)]
        forward = consistency(dists)
        assert consistency(list(reversed(dists))) == pytest.approx(forward, abs=1e-12)

    def test_zero_iff_all_equal(self):
        a = dist("a", [0.5, 0.5])
        b = dist("b", [0.6, 0.4])
        assert consistency([a, a]) == 0.0
        assert consistency([a, b]) > 0.0


class TestStoryRanking:
    def test_identical_image_story_ranks_first(self):
        calm = [dist("x", [0.5, 0.5]), dist("y", [0.5, 0.5])]
        noisy = [dist("p", [0.9, 0.1]), dist("q", [0.2, 0.8])]
        ranked = rank_stories_by_consistency([("noisy", noisy), ("calm", calm)])
        assert [story for story, _ in ranked] == ["calm", "noisy"]
        assert ranked[0][1] == 0.0

    def test_hand_scores_order(self):
        a = [dist("1", [0.6, 0.4]), dist("2", [0.5, 0.5])]
        b = [dist("3", [0.95, 0.05]), dist("4", [0.1, 0.9])]
        ranked = rank_stories_by_consistency([("b", b), ("a", a)])
        assert [s for s, _ in ranked] == ["a", "b"]
        assert ranked[0][1] == pytest.approx(consistency(a))
        assert ranked[1][1] == pytest.approx(consistency(b))

    def test_single_story_passthrough(self):
        ranked = rank_stories_by_consistency([("only", [dist("a", [1.0])])])
        assert ranked == [("only", 0.0)]

    def test_imageless_stories_rank_last_in_input_order(self):
        withimg = [dist("a", [0.5, 0.5])] * 2
        ranked = rank_stories_by_consistency([("bare1", []), ("pics", withimg), ("bare2", [])])
        assert [s for s, _ in ranked] == ["pics", "bare1", "bare2"]
        assert ranked[1][1] is None
        assert ranked[2][1] is None


class TestTsvLoader:
    def test_round_trip(self, tmp_path):
        path = tmp_path / "classes.tsv"
        path.write_text("# comment\nimg-1\t0.25\t0.75\nimg-2\t1.0\t0.0\n", "utf-8")
        table = load_class_distributions(path)
        assert set(table) == {"img-1", "img-2"}
        np.testing.assert_allclose(table["img-1"].probabilities, [0.25, 0.75])

    def test_bad_sum_rejected(self, tmp_path):
        path = tmp_path / "classes.tsv"
        path.write_text("img-1\t0.2\t0.2\n", "utf-8")
        with pytest.raises(ValueError):
            load_class_distributions(path)

    def test_non_numeric_rejected(self, tmp_path):
        path = tmp_path / "classes.tsv"
        path.write_text("img-1\tmany\tfew\n", "utf-8")
        with pytest.raises(ValueError):
            load_class_distributions(path)
