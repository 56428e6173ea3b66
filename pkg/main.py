"""
designcraft 主入口文件
构造五重量 BCH 码 C_m 及其相关码，用闭式公式与穷举两种方式核对重量分布与 t-设计，
并输出验证报告。
"""

import argparse
import logging
from typing import Optional

from analysis.design_engine import (assmus_mattson_audit, divisibility_check, lambda_from_count,
                                    supports_to_design, verification_work, verify_t_design)
from analysis.verification_report import VerificationReport
from analysis.weight_enum import (WeightDistribution, check_odd_m, dual_count_at, macwilliams, pless_check,
                                  table1_params, weight_symmetry)
from config.settings import DESIGN_CONFIG, FILE_PATHS, LOGGING_CONFIG
from core.binomials import shared_table
from core.bch_construct import Variant, build_C_m
from core.enumeration import within_budget
from core.errors import DesignCraftError, EnumerationBudgetError
from core.finite_field import field_new
from core.linear_code import LinearCode, double_dual_generator, dual, extend, spans_equal, weight_distribution
from families.registry import AM_PAIRS, FAMILIES, get_family

logger = logging.getLogger(__name__)

LEVELS = ('formulas', 'full')


def _distribution_summary(wd: WeightDistribution) -> str:
    return f"{len(wd.nonzero_weights())} nonzero weights, total {wd.total()}"


def compare_distributions(report: VerificationReport, name: str, expected: WeightDistribution,
                          observed: WeightDistribution, provenance: str):
    """One record per distribution pair; only differing weights are listed on mismatch."""
    if expected == observed:
        report.compare(name, _distribution_summary(expected), _distribution_summary(observed), provenance)
        return
    width = max(expected.n, observed.n)
    diff = [w for w in range(width + 1) if expected[w] != observed[w]]
    report.compare(name, {w: expected[w] for w in diff}, {w: observed[w] for w in diff}, provenance)


def _safe(fn, *args):
    """Run a closed form; a formula inconsistency becomes the observed value."""
    try:
        return fn(*args)
    except DesignCraftError as e:
        return f"error: {e}"


# ================== 公式层面检查 ==================

def check_formulas(report: VerificationReport, m: int):
    params = table1_params(m)
    report.compare('table1.total', 1 << (3 * m), 1 + sum(params.frequencies), 'five-weight frequencies')

    # 对偶码：重量 1..6 为零，重量 7 为正
    low = [dual_count_at(m, k, params) for k in range(1, 8)]
    report.compare('dual.zero_weights_1_6', [0] * 6, low[:6], 'dual closed form')
    report.compare('dual.weight7_positive', True, low[6] > 0, 'dual closed form')

    primal = get_family('primal')
    dual_family = get_family('dual')
    table1 = primal.closed_form(m)
    dual_wd = dual_family.closed_form(m)
    compare_distributions(report, 'dual.macwilliams', dual_wd, macwilliams(table1, 3 * m),
                          'dual closed form vs MacWilliams(five-weight distribution)')

    double = get_family('double_dual')
    extended = get_family('extended_dual')
    double_wd = double.closed_form(m)
    extended_wd = extended.closed_form(m)
    report.compare('double_dual.pless', True, pless_check(double_wd, m), 'first and third power moments')
    report.compare('double_dual.symmetry', True, weight_symmetry(double_wd), 'palindromic enumerator')
    compare_distributions(report, 'extended_dual.macwilliams', extended_wd, macwilliams(double_wd, 3 * m + 1),
                          'extended-dual closed form vs MacWilliams(double dual)')
    report.compare('extended_dual.odd_weights_zero', True,
                   all(extended_wd[k] == 0 for k in range(1, extended_wd.n + 1, 2)), 'extended-dual closed form')

    distributions = {'primal': table1, 'dual': dual_wd, 'double_dual': double_wd, 'extended_dual': extended_wd}
    for name, family in FAMILIES.items():
        v = family.point_count(m)
        for k in family.tabulated_weights(m):
            count = family.count_at(m, k)
            stated = _safe(family.block_count_formula, m, k)
            if name in ('dual', 'extended_dual'):
                report.compare(f"{name}.block_count.k{k}", stated, count, 'published block count vs closed form')
            lam = _safe(family.design_lambda, m, k)
            report.compare(f"{name}.lambda.k{k}", lam, _safe(lambda_from_count, count, family.strength, v, k),
                           'published lambda vs closed-form count')
            divisible = divisibility_check(family.strength, v, k, lam) if isinstance(lam, int) else lam
            report.compare(f"{name}.divisibility.k{k}", True, divisible, 'necessary divisibility condition')

    for t, (primal_name, dual_name) in zip((2, 3), AM_PAIRS):
        wd, wd_dual = distributions[primal_name], distributions[dual_name]
        am = assmus_mattson_audit(wd, wd_dual, t)
        report.compare(f"am.t{t}.s", 5, am.s, 'Assmus-Mattson audit', note=f"orientation {am.orientation}")
        report.compare(f"am.t{t}.d", FAMILIES[primal_name].tabulated_weights(m)[0], am.d, 'Assmus-Mattson audit')
        report.compare(f"am.t{t}.passes", True, am.passes, 'Assmus-Mattson audit')
        report.compare(f"am.t{t}.design_weights", list(FAMILIES[primal_name].tabulated_weights(m)),
                       list(am.design_weights), 'Assmus-Mattson audit')


# ================== 穷举层面检查 ==================

def check_constructions(report: VerificationReport, m: int) -> LinearCode:
    ctx = field_new(m)
    codes = {}
    for variant in Variant:
        code = build_C_m(m, variant, ctx)
        report.compare(f"construction.{variant.value}.dimension", [(1 << m) - 1, 3 * m], [code.n, code.k],
                       'BCH construction')
        codes[variant] = code
    primal = codes[Variant.BCH_B0]
    report.compare('double_dual.construction_paths', True,
                   spans_equal(dual(extend(dual(primal))), double_dual_generator(primal)),
                   'dual(extend(dual(C))) vs [1|1; G|0]')
    table1 = get_family('primal').closed_form(m)
    other = codes[Variant.DUAL_NARROW_7]
    if within_budget(other.k):
        compare_distributions(report, 'primal.distribution.dual-narrow7', table1,
                              weight_distribution(other), 'five-weight closed form vs enumeration')
    else:
        report.skip('primal.distribution.dual-narrow7', _distribution_summary(table1), 'five-weight closed form',
                    f"2^{other.k} codewords")
    return primal


def check_enumeration(report: VerificationReport, m: int, primal: LinearCode, threads: Optional[int]):
    minimum = {'dual': 7, 'extended_dual': 8}
    table = shared_table()
    for name, family in FAMILIES.items():
        code = family.build(primal)
        report.compare(f"{name}.dimension", family.dimension(m), code.k, 'family dimension vs construction')
        expected = family.closed_form(m)
        if not within_budget(code.k):
            reason = f"2^{code.k} codewords exceeds the enumeration budget"
            report.skip(f"{name}.distribution", _distribution_summary(expected), 'closed form', reason)
            for k in family.tabulated_weights(m):
                report.skip(f"{name}.design.k{k}", _safe(family.design_lambda, m, k), 'published lambda', reason)
            continue
        observed = weight_distribution(code, threads=threads)
        compare_distributions(report, f"{name}.distribution", expected, observed, 'closed form vs enumeration')
        if name in minimum:
            report.compare(f"{name}.minimum_distance", minimum[name], observed.minimum_distance(), 'enumeration')

        v = family.point_count(m)
        t = family.strength
        for k in family.tabulated_weights(m):
            lam = _safe(family.design_lambda, m, k)
            work = verification_work(observed[k], k, t)
            if work > DESIGN_CONFIG['work_budget'] or table.comb(v, t) > DESIGN_CONFIG['counter_budget']:
                report.skip(f"{name}.design.k{k}", lam, 'published lambda',
                            f"{observed[k]} blocks x C({k},{t}) = {work} rank operations")
                continue
            try:
                design = supports_to_design(code, k, threads=threads)
            except EnumerationBudgetError as e:
                report.skip(f"{name}.design.k{k}", lam, 'published lambda', str(e))
                continue
            report.compare(f"{name}.blocks.k{k}", observed[k], design.block_count, 'A_k vs extracted supports')
            check = verify_t_design(design, t, threads=threads)
            verdict = check.lam if check.holds else f"min={check.min_count}, max={check.max_count}"
            report.compare(f"{name}.design.k{k}", lam, verdict, 'published lambda vs exhaustive counters')


def run_verification(m: int, level: str = 'full', threads: Optional[int] = None) -> VerificationReport:
    """Every formula, enumeration and design check at the given m."""
    check_odd_m(m)
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}, got {level!r}")
    report = VerificationReport(m=m, level=level)
    logger.info(f"开始验证 m={m} (level={level})")
    if level == 'full':
        primal = check_constructions(report, m)
    check_formulas(report, m)
    if level == 'full':
        check_enumeration(report, m, primal, threads)
    summary = report.summary()
    logger.info(f"验证完成: {summary}")
    return report


def main(m=5, level='full', threads=None, json_path=None):
    report = run_verification(m, level, threads)
    with open(FILE_PATHS['report'], 'w', encoding='utf-8') as f:
        f.write(report.to_text())
    if json_path:
        with open(json_path, 'w', encoding='utf-8') as f:
            f.write(report.to_json())
    logger.info(f"执行完成。报告已写入 {FILE_PATHS['report']}\n{report.summary_frame().to_string(index=False)}")
    return report.exit_code()


if __name__ == '__main__':
    logging.basicConfig(
        level=getattr(logging, LOGGING_CONFIG['level']),
        format=LOGGING_CONFIG['format']
    )
    parser = argparse.ArgumentParser(description='designcraft verification pipeline')
    parser.add_argument('--m', type=int, default=5, help='Odd extension degree m >= 5')
    parser.add_argument('--level', type=str, default='full', choices=LEVELS,
                        help='formulas: closed forms only; full: also enumerate and verify designs')
    parser.add_argument('--threads', type=int, default=None, help='Worker thread cap')
    parser.add_argument('--json', type=str, default=None, help='Also write the JSON report here')
    args = parser.parse_args()
    raise SystemExit(main(m=args.m, level=args.level, threads=args.threads, json_path=args.json))
