# Copyright 2026 The ordstat Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Tests for the bound engine."""
import math

import numpy as np
import pytest

from ordstat.lib.error import DomainError, PreconditionError, VacuousMomentError

from . import bound_engine
from . import distributions
from . import order_moments
from .bound_engine import BoundParams, ProofCase
from .order_moments import MomentParams, OrderStatSpec

RHO_GRID = (0.3, 0.5, 1.0, 1.5, 2.0, 3.0, 3.7)


def _n_grid(rho):
  start = math.ceil(2 * rho + 1)
  return list(range(start, 51)) + [63, 79, 100, 126, 158, 200]


def test_c_rho():
  """Test the constant."""
  assert bound_engine.c_rho(1.0) == pytest.approx(
      2 * math.exp(1 + 7 / 6), rel=1e-14)
  assert bound_engine.c_rho(1.0) == pytest.approx(17.458277, rel=1e-7)
  with pytest.raises(DomainError):
    bound_engine.c_rho(0.0)


def test_theorem1_bound():
  """Test the bound on a few cells."""
  uniform = BoundParams(MomentParams(1, 1), OrderStatSpec(9, 5), 0.5)
  # C_1 E|X| / g(1/2) with g(1/2) = 1/4.
  assert bound_engine.theorem1_bound(uniform) == pytest.approx(
      2 * math.exp(13 / 6) * 0.5 * 4, rel=1e-12)
  assert bound_engine.theorem1_bound(uniform) == pytest.approx(
      34.916553, rel=1e-7)
  assert bound_engine.theorem1_bound(uniform, c_scale=1e-3) == pytest.approx(
      0.034916553, rel=1e-7)

  top = BoundParams(MomentParams(1, 1), OrderStatSpec(9, 9), 0.5)
  assert bound_engine.theorem1_bound(top) == pytest.approx(
      2 * math.exp(13 / 6) * 0.5 / 0.09, rel=1e-12)

  exponential = BoundParams(MomentParams(2, 1), OrderStatSpec(11, 6), 1.0)
  assert bound_engine.theorem1_bound(exponential) == pytest.approx(
      bound_engine.c_rho(2.0) * 16, rel=1e-12)

  infinite = BoundParams(MomentParams(2, 1), OrderStatSpec(11, 6), math.inf)
  assert bound_engine.theorem1_bound(infinite) == math.inf

  zero = BoundParams(MomentParams(2, 1), OrderStatSpec(11, 6), 0.0)
  assert bound_engine.theorem1_bound(zero) == 0.0


def test_theorem1_bound_preconditions():
  """Test inapplicable cells name the failed constraint."""
  small = BoundParams(MomentParams(2, 1), OrderStatSpec(3, 2), 1.0)
  with pytest.raises(PreconditionError) as exc:
    bound_engine.theorem1_bound(small)
  assert exc.value.constraint.startswith('n >= 2*rho+1')

  low_rank = BoundParams(MomentParams(3, 1), OrderStatSpec(11, 2), 1.0)
  with pytest.raises(PreconditionError) as exc:
    bound_engine.theorem1_bound(low_rank)
  assert exc.value.constraint.startswith('i >= rho')

  high_rank = BoundParams(MomentParams(3, 1), OrderStatSpec(11, 10), 1.0)
  with pytest.raises(PreconditionError) as exc:
    bound_engine.theorem1_bound(high_rank)
  assert exc.value.constraint.startswith('i <= n-rho+1')


def test_proof_case():
  """Test the classification of ranks."""
  assert bound_engine.proof_case(OrderStatSpec(9, 5), 1.0) is ProofCase.CENTRAL
  assert bound_engine.proof_case(OrderStatSpec(9, 9),
                                 1.0) is ProofCase.UPPER_EDGE
  assert bound_engine.proof_case(OrderStatSpec(9, 1),
                                 1.0) is ProofCase.LOWER_EDGE
  assert bound_engine.proof_case(OrderStatSpec(11, 2),
                                 1.5) is ProofCase.LOWER_EDGE
  assert bound_engine.proof_case(OrderStatSpec(11, 1),
                                 1.5) is ProofCase.INVALID
  assert bound_engine.proof_case(OrderStatSpec(11, 11),
                                 1.5) is ProofCase.INVALID
  assert bound_engine.proof_case(OrderStatSpec(3, 2),
                                 2.0) is ProofCase.INVALID
  assert bound_engine.proof_case(OrderStatSpec(4, 2),
                                 2.0) is ProofCase.INVALID
  assert bound_engine.proof_case(OrderStatSpec(5, 2),
                                 2.0) is ProofCase.LOWER_EDGE


def test_consequence_bound():
  """Test the rank-free bound."""
  assert bound_engine.consequence_bound(1.0, 0.25, 0.75, 1.0) == (
      pytest.approx(bound_engine.c_rho(1.0) / (0.125 * 0.875), rel=1e-12))
  assert bound_engine.consequence_bound(1.0, 0.25, 0.75, 1.0) == (
      pytest.approx(159.6185, rel=1e-5))
  assert bound_engine.consequence_bound(math.inf, 0.25, 0.75, 1.0) == math.inf
  for alpha, beta in ((0.5, 0.5), (0.0, 0.5), (0.5, 1.0), (0.7, 0.3)):
    with pytest.raises(PreconditionError):
      bound_engine.consequence_bound(1.0, alpha, beta, 1.0)


def test_consequence_domination():
  """Test the per-rank bound never exceeds the rank-free constant."""
  for alpha, beta in bound_engine.CONSEQUENCE_WINDOWS:
    for rho in (0.5, 1.0, 2.0):
      for n in (5, 11, 101):
        reports = bound_engine.check_consequence_domination(
            n, rho, alpha, beta)
        assert all(report.holds for report in reports), reports


def test_inequality_report():
  """Test margins and strictness."""
  report = bound_engine.InequalityReport.compare('x', 1.0, math.e)
  assert report.holds
  assert report.margin == pytest.approx(1.0)

  report = bound_engine.InequalityReport.compare('x', 1.0, 1.0, strict=True)
  assert not report.holds
  assert report.violated

  report = bound_engine.InequalityReport.compare('x', 0.0, 2.0)
  assert report.margin == 2.0

  report = bound_engine.InequalityReport.compare_logs('x', 2000.0, 2001.0)
  assert report.holds
  assert report.lhs == math.inf
  assert report.margin == 1.0


def test_chebyshev():
  """Test the quantile tail inequality over the zoo."""
  for dist in distributions.make_zoo():
    for delta in (0.5, 1.0, 2.0):
      try:
        report = bound_engine.chebyshev_worst(dist, delta)
      except VacuousMomentError:
        assert dist.name == 'pareto1.5' and delta == 2.0
        continue
      assert report.holds, report

  report = bound_engine.chebyshev_check(distributions.Uniform(), 1.0, 0.5)
  assert report.lhs == 0.25
  assert report.rhs == 0.5

  with pytest.raises(DomainError):
    bound_engine.chebyshev_check(distributions.Uniform(), 1.0, 1.0)


def test_stirling_reports():
  """Test the sandwich holds on a log grid."""
  reports = bound_engine.stirling_reports(np.geomspace(1e-3, 1e3, 50))
  assert len(reports) == 100
  assert all(report.holds for report in reports)
  assert all(report.scale == 'log' for report in reports)


def test_beta_ratio_lower_example():
  """Test B(2, 8) / B(3, 8) = 5."""
  report = bound_engine.check_beta_ratio_lower(3, 10, 1.0)
  assert report.name == 'eq4'
  assert report.lhs == pytest.approx(5.0, rel=1e-12)
  assert report.holds

  with pytest.raises(PreconditionError):
    bound_engine.check_beta_ratio_lower(1, 10, 1.0)


def test_beta_ratio_printed_variant():
  """Test the informational variant is recorded but never decides holds."""
  report = bound_engine.check_beta_ratio_lower(4.7, 10, 3.7)
  assert report.holds
  assert 'printed_holds' in report.params
  assert report.params['printed_rhs'] < report.rhs

  upper = bound_engine.check_beta_ratio_upper(3, 10, 3.7)
  lower = bound_engine.check_beta_ratio_lower(8, 10, 3.7)
  assert upper.holds
  assert upper.params['printed_rhs'] < upper.rhs
  assert upper.params['printed_rhs'] == pytest.approx(
      lower.params['printed_rhs'], rel=1e-12)
  assert upper.params['printed_holds'] == (
      upper.lhs <= upper.params['printed_rhs'])


@pytest.mark.parametrize('rho', RHO_GRID)
def test_beta_ratios_on_grid(rho):
  """Test both beta ratio bounds and their symmetry."""
  for n in _n_grid(rho):
    ranks = [rho + 1] + list(range(math.ceil(rho + 1), n + 1))
    for i in ranks:
      report = bound_engine.check_beta_ratio_lower(i, n, rho)
      assert report.holds, report
    for i in range(1, math.floor(n - rho) + 1):
      report = bound_engine.check_beta_ratio_upper(i, n, rho)
      assert report.holds, report
      assert report.params['symmetry_error'] <= 1e-10
      assert bound_engine.check_beta_ratio_symmetry(i, n, rho).holds


@pytest.mark.parametrize('rho', RHO_GRID)
def test_central_chain_on_grid(rho):
  """Test every link of the central chain."""
  for n in _n_grid(rho):
    for i in range(math.ceil(rho + 2), math.floor(n - rho) + 1):
      reports = bound_engine.check_central_chain(i, n, rho)
      assert [r.name for r in reports] == [
          'eq6_lt_eq7', 'eq7_factor_power', 'eq7_factor_root',
          'eq7_factor_ratio', 'eq7_lt_eq8', 'eq8'
      ]
      for report in reports:
        assert report.holds, report


def test_central_chain_precondition():
  with pytest.raises(PreconditionError):
    bound_engine.check_central_chain(2, 10, 1.0)


@pytest.mark.parametrize('rho', RHO_GRID)
def test_edge_cases_on_grid(rho):
  """Test the edge bounds and their targets."""
  for n in _n_grid(rho):
    reports = bound_engine.check_edge_cases(n, rho)
    assert reports
    for report in reports:
      assert report.holds, report


def test_edge_case_names():
  """Test which edge bounds apply for each kind of rho."""
  names = lambda rho: [r.name for r in bound_engine.check_edge_cases(20, rho)]
  assert names(1.0) == ['eq11', 'eq11_target']
  assert names(0.5) == ['eq12', 'eq12_target']
  assert names(1.5) == ['eq13', 'eq13_target', 'eq18', 'eq18_target']
  assert names(3.0) == ['eq11', 'eq11_target', 'eq16', 'eq16_target']

  with pytest.raises(PreconditionError):
    bound_engine.check_edge_cases(4, 2.0)


def test_edge_case_values():
  """Test the binomial and beta values at the edges."""
  eq11, target = bound_engine.check_edge_cases(10, 2.0)[:2]
  assert eq11.lhs == pytest.approx(45.0, rel=1e-12)
  assert target.rhs == pytest.approx(math.exp(3) * (10 / 3)**2, rel=1e-12)

  eq16 = bound_engine.check_edge_cases(10, 3.0)[2]
  assert eq16.name == 'eq16'
  assert eq16.lhs == pytest.approx(360.0, rel=1e-12)


def test_holder():
  """Test the bound for the minimum when rho <= 1."""
  assert bound_engine.holder_i1_bound(10, 0.5) == pytest.approx(math.sqrt(10))
  for rho in (0.3, 0.5, 1.0):
    for n in _n_grid(rho):
      assert bound_engine.check_holder_i1(n, rho).holds
  with pytest.raises(DomainError):
    bound_engine.holder_i1_bound(10, 1.5)
  with pytest.raises(PreconditionError):
    bound_engine.holder_i1_bound(2, 1.0)


def test_moment_level_checks():
  """Test eq2, the Holder moment bound and theorem1 on exact moments."""
  bound_params = BoundParams(MomentParams(1, 1), OrderStatSpec(9, 5), 0.5)
  # Uniform: E U_{5:9} = 1/2.
  report = bound_engine.check_eq2(0.5, bound_params)
  assert report.holds
  # Both beta ratios are 9/4.
  assert report.rhs == pytest.approx(2.25, rel=1e-12)

  report = bound_engine.check_holder_moment(0.9, 9, 9, 1.0, 0.5)
  assert report.holds
  assert report.name == 'holder_in'
  assert report.rhs == pytest.approx(4.5)

  report = bound_engine.check_theorem1(0.5, 34.92)
  assert report.holds and report.strict
  report = bound_engine.check_theorem1(0.0, 0.0)
  assert report.holds and not report.strict

  with pytest.raises(PreconditionError):
    bound_engine.eq2_bound(
        BoundParams(MomentParams(1, 1), OrderStatSpec(9, 9), 0.5))


def test_edge_moment_ranks():
  """Test which ranks get the moment level edge bound."""
  assert bound_engine.edge_moment_ranks(5, 2.0) == (2, 4)
  assert bound_engine.edge_moment_ranks(5, 1.5) == (2, 4)
  assert bound_engine.edge_moment_ranks(7, 3.0) == (3, 5)
  assert bound_engine.edge_moment_ranks(10, 3.7) == (4, 7)
  assert bound_engine.edge_moment_ranks(9, 1.0) == ()
  assert bound_engine.edge_moment_ranks(9, 0.5) == ()


def test_edge_moment_uniform():
  """Test the edge bounds on uniform moments for rho = 2 and rho = 1.5."""
  # 1 / B(2, 4) = 20 and E U = 1/2.
  report = bound_engine.check_edge_moment(1 / 7, 5, 2, 2.0, 0.5)
  assert report.name == 'eq15'
  assert report.rhs == pytest.approx(5.0, rel=1e-12)
  assert report.holds
  # E U_{4:5}^2 = 20 / 42.
  assert bound_engine.check_edge_moment(20 / 42, 5, 4, 2.0, 0.5).holds

  # 5! 3^(-1/2) / (1! 3!) times (E U^2)^(3/2) = 20/9, E U_{2:5}^3 = 1/14.
  report = bound_engine.check_edge_moment(1 / 14, 5, 2, 1.5, 1 / 3)
  assert report.name == 'eq17'
  assert report.rhs == pytest.approx(20 / 9, rel=1e-12)
  assert report.holds

  assert not bound_engine.check_edge_moment(6.0, 5, 2, 2.0, 0.5).holds
  with pytest.raises(PreconditionError):
    bound_engine.check_edge_moment(0.5, 5, 3, 2.0, 0.5)
  with pytest.raises(DomainError):
    bound_engine.log_edge_moment_factor(9, 1.0)
  with pytest.raises(PreconditionError):
    bound_engine.log_edge_moment_factor(4, 2.0)


@pytest.mark.parametrize('k,delta', [(2.0, 1.0), (3.0, 2.0), (3.0, 1.0)])
def test_edge_moment_exponential(k, delta):
  """Test the edge bounds hold at both edge ranks of exponential samples."""
  exponential = distributions.Exponential()
  rho = k / delta
  moment_delta = distributions.abs_moment(exponential, delta)
  for n in (7, 9, 15, 30):
    for i in bound_engine.edge_moment_ranks(n, rho):
      moment = order_moments.moment_quadrature(
          exponential, OrderStatSpec(n, i), k).value
      report = bound_engine.check_edge_moment(
          moment, n, i, rho, moment_delta)
      assert report.holds, (n, i)


@pytest.mark.parametrize('scale', [0.1, 10.0])
def test_theorem1_scale_covariance(scale):
  """Test scaling X by c scales the moment and the bound by c^k."""
  k, delta = 2.0, 1.0
  params = MomentParams(k, delta)
  base = distributions.Exponential()
  scaled = distributions.scaled(base, scale)
  base_delta = distributions.abs_moment_numeric(base, delta)
  scaled_delta = distributions.abs_moment_numeric(scaled, delta)
  assert scaled_delta == pytest.approx(scale**delta * base_delta, rel=1e-8)

  n = 11
  for i in range(2, n):
    spec = OrderStatSpec(n, i)
    base_bound = bound_engine.theorem1_bound(
        BoundParams(params, spec, base_delta))
    scaled_bound = bound_engine.theorem1_bound(
        BoundParams(params, spec, scaled_delta))
    assert scaled_bound == pytest.approx(scale**k * base_bound, rel=1e-7)

    base_moment = order_moments.moment_quadrature(base, spec, k).value
    scaled_moment = order_moments.moment_quadrature(scaled, spec, k).value
    assert scaled_moment == pytest.approx(scale**k * base_moment, rel=1e-7)
    assert (bound_engine.check_theorem1(base_moment, base_bound).holds ==
            bound_engine.check_theorem1(scaled_moment, scaled_bound).holds)
