import math

import numpy as np
import pytest

from hyperreduce import catalog
from hyperreduce.catalog import ReductionRequest
from hyperreduce.errors import (
    DegenerateParametersError,
    DomainError,
)
from hyperreduce.series import Status, eval_pfq


def test_catalog_size_and_ordinals():
    ids = catalog.catalog_ids()
    assert len(ids) == 28
    ordinals = [catalog.get_entry(i).ordinal for i in ids]
    assert sorted(ordinals) == list(range(28))


def test_unknown_id():
    with pytest.raises(KeyError):
        catalog.get_entry("NoSuchId")


def test_f32_half_bateman_n0():
    # collapses to 2F1(1,1;2;1/2) = 2 ln 2
    req = ReductionRequest("F32HalfBateman", {"a": 1.0, "c": 2.5}, {"n": 0})
    res = catalog.reduce(req)
    assert res.value == pytest.approx(2.0 * math.log(2.0), rel=1e-13)
    assert res.status is Status.CONVERGED
    oracle = eval_pfq(catalog.lhs_spec(req))
    assert res.value == pytest.approx(oracle.value, rel=1e-12)


def test_f21_contiguous_example():
    req = ReductionRequest("F21Contiguous", {"b": 0.7, "c": 1.4}, {"n": 2}, 0.3)
    res = catalog.reduce(req)
    oracle = eval_pfq(catalog.lhs_spec(req), tol=1e-16)
    assert res.value == pytest.approx(oracle.value, rel=1e-11)


def test_pp2_unity_example():
    req = ReductionRequest(
        "Pp2Fp1Unity", {"a": (0.4, 1.3), "b": -0.5, "c": 2.0}, {"n": 1}
    )
    res = catalog.reduce(req)
    oracle = eval_pfq(catalog.lhs_spec(req), tol=1e-13, max_terms=400_000)
    assert res.value == pytest.approx(oracle.value, rel=1e-8)


def test_lhs_spec_transcriptions():
    spec = catalog.lhs_spec(
        ReductionRequest("F12BesselI", {"b": 1.5, "c": 2.0}, {"n": 1}, 0.4)
    )
    assert spec.upper == (3.0,)
    assert spec.lower == (1.5, 2.0)
    assert spec.z == 0.4

    spec = catalog.lhs_spec(
        ReductionRequest("F22Laguerre", {"a": 1.0, "b": 2.0}, {"n": 1, "m": 1}, 0.5)
    )
    assert spec.upper == (2.0, 3.0)
    assert spec.lower == (1.0, 2.0)
    assert spec.z == 0.5

    spec = catalog.lhs_spec(
        ReductionRequest("F32P0", {"b": 0.6, "c": 1.1, "d": 2.2}, {"n": 1, "m": 2}, -0.4)
    )
    assert spec.upper == (0.6, 2.1, 4.2)
    assert spec.lower == (1.1, 2.2)
    assert spec.z == -0.4


def test_bessel_j_lhs_uses_negated_argument():
    spec = catalog.lhs_spec(
        ReductionRequest("F12BesselJ", {"b": 1.5, "c": 2.0}, {"n": 1}, 0.4)
    )
    assert spec.z == -0.4


def test_signature_validation():
    with pytest.raises(ValueError):
        catalog.reduce(ReductionRequest("F21Contiguous", {"b": 0.7}, {"n": 2}, 0.3))
    with pytest.raises(ValueError):
        catalog.reduce(
            ReductionRequest(
                "F21Contiguous", {"b": 0.7, "c": 1.4, "d": 1.0}, {"n": 2}, 0.3
            )
        )
    with pytest.raises(ValueError):
        catalog.reduce(
            ReductionRequest("F21Contiguous", {"b": 0.7, "c": 1.4}, {"n": 2, "m": 1}, 0.3)
        )
    with pytest.raises(ValueError):
        catalog.reduce(ReductionRequest("F21Contiguous", {"b": 0.7, "c": 1.4}, {"n": -1}, 0.3))
    with pytest.raises(ValueError):
        catalog.reduce(ReductionRequest("F21Contiguous", {"b": 0.7, "c": 1.4}, {"n": 2}))
    # fixed-z entry: explicit mismatching z rejected
    with pytest.raises(ValueError):
        catalog.reduce(ReductionRequest("F21HalfBateman", {"a": 1.0}, {"n": 1}, 0.3))


def test_domain_validation():
    with pytest.raises(DegenerateParametersError):
        catalog.reduce(
            ReductionRequest("F43Unity", {"a": 0.2, "b": 1.0, "c": 1.0}, {"n": 1})
        )
    with pytest.raises(DomainError):
        catalog.reduce(
            ReductionRequest(
                "Pp3Fp2Unity",
                {"a": (0.5, 1.5), "b": 0.5, "c": 1.0, "d": 1.0},
                {"n": 2, "m": 1},
            )
        )  # violates b < 1 - max(n, m)
    with pytest.raises(DegenerateParametersError):
        catalog.reduce(
            ReductionRequest(
                "Mp1FmIncBeta", {"a": (0.5, 0.5 + 1e-8), "b": -0.5}, {}, 0.5
            )
        )
    with pytest.raises(DomainError):
        catalog.reduce(ReductionRequest("F32P0", {"b": 0.6, "c": 1.1, "d": 2.2}, {"n": 1, "m": 1}, 1.0))
    with pytest.raises(DomainError):
        catalog.reduce(ReductionRequest("F01Bessel", {"b": 1.5}, {}, -1.0))
    with pytest.raises(DomainError):
        catalog.reduce(ReductionRequest("F32UnityBB", {"a": 0.2, "b": 1.0}, {"n": 0}))


def test_sampling_determinism():
    for entry_id in ("F21Contiguous", "Pp3Fp2Unity", "F43Unity"):
        rng1 = np.random.default_rng(42)
        rng2 = np.random.default_rng(42)
        reqs1 = [catalog.sample_request(entry_id, rng1) for _ in range(5)]
        reqs2 = [catalog.sample_request(entry_id, rng2) for _ in range(5)]
        assert reqs1 == reqs2


def test_sampling_respects_constraints():
    rng = np.random.default_rng(7)
    for _ in range(10):
        req = catalog.sample_request("Pp3Fp2Unity", rng)
        assert req.scalars["b"] < 1.0 - max(req.shifts["n"], req.shifts["m"])
    rng = np.random.default_rng(1)
    for _ in range(10):
        req = catalog.sample_request("F43Unity", rng)
        assert abs(req.scalars["b"] - req.scalars["c"]) >= 0.05


def test_sampled_requests_are_in_domain_everywhere():
    rng = np.random.default_rng(5)
    for entry_id in catalog.catalog_ids():
        for _ in range(3):
            req = catalog.sample_request(entry_id, rng)
            # must not raise
            catalog.reduce(req)
            catalog.lhs_spec(req)
