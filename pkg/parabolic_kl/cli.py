"""Main parabolic-kl command line."""

import json
import sys
from typing import Dict, List, Optional, Tuple

import click

from parabolic_kl.algebra.hecke_module import factorized_product, kl_basis_by_solve, parabolic_kl
from parabolic_kl.algebra.laurent import ZERO, LaurentPoly
from parabolic_kl.combinatorics.cosets import (
    Tableau,
    format_permutation,
    grassmannian,
    longest_representative,
    parse_permutation,
    rs_first_tableau,
    string_from_permutation,
    string_from_tableau,
)
from parabolic_kl.combinatorics.paths import (
    MINUS,
    PLUS,
    BinaryString,
    LinkPattern,
    PathNK,
    dominates,
    ferrers_diagram,
    link_pattern,
    parse_convention,
    parse_path_or_string,
    path_from_link_pattern,
    path_leq,
    path_to_string,
    string_to_path,
)
from parabolic_kl.reporting.renderer import Renderer
from parabolic_kl.reporting.reporter import FORMATS, Reporter
from parabolic_kl.rules.dyck import StripConfig, enumerate_configurations, q_polynomial
from parabolic_kl.rules.ls_tree import CapTree, Labelling, build_tree, enumerate_labellings, ls_polynomial
from parabolic_kl.tables import KLTable, build_table
from parabolic_kl.utils.config import Config
from parabolic_kl.utils.errors import InvalidInputError, KLError, MethodMismatchError, SizeLimitError
from parabolic_kl.utils.logger import set_log_level, setup_logger
from parabolic_kl.verification.verifier import SUITES, VerificationReport, Verifier

logger = setup_logger(__name__)

POLY_METHODS = ("rule1", "rule2", "lstree", "hecke", "all")
# every method that computes P^sign, in the order method=all prints them
ALL_METHODS = {PLUS: ("rule1", "lstree", "hecke", "solve"), MINUS: ("rule2", "hecke", "product", "solve")}
REPRESENTATIONS = ("string", "path", "linkpattern", "grassmannian", "longest", "tableau", "ferrers")

EXIT_FAILURE = 1
EXIT_USAGE = 2


class KLCalculator:
    """Front end tying the methods, tables and verification suites together."""

    def __init__(self, config: Optional[Config] = None):
        """
        Initialize calculator.

        Args:
            config: Configuration object (optional)
        """
        self.config = config or Config()
        self.reporter = Reporter()
        self.renderer = Renderer()

    def polynomial(self, alpha: PathNK, beta: PathNK, sign: int, method: str) -> LaurentPoly:
        """
        One polynomial for the pair (alpha, beta).

        rule1 / rule2 give Q^{I,sign} / Q^{II,sign}; lstree, hecke, product
        and solve give P^sign.
        """
        if alpha.N != beta.N or alpha.K != beta.K:
            raise InvalidInputError(f"{alpha} and {beta} do not belong to the same P(N,K)")
        if method not in ALL_METHODS[PLUS] + ALL_METHODS[MINUS]:
            raise InvalidInputError(f"Unknown method: {method}")
        if method == "lstree" and sign != PLUS:
            raise InvalidInputError("the lstree method computes P^+ only, use --sign +")
        if not path_leq(alpha, beta, sign):
            return ZERO
        if method == "rule1":
            return q_polynomial(alpha, beta, "I", sign)
        if method == "rule2":
            return q_polynomial(alpha, beta, "II", sign)
        if method == "lstree":
            return ls_polynomial(beta, alpha)
        if method == "hecke":
            return parabolic_kl(alpha, beta, sign)
        if method == "product":
            if sign != MINUS:
                raise InvalidInputError("the factorized product computes P^- only")
            return factorized_product(beta).coefficient(alpha)
        return kl_basis_by_solve(beta, sign).coefficient(alpha)

    def compare_methods(self, alpha: PathNK, beta: PathNK, sign: int) -> Tuple[List[Tuple[str, LaurentPoly]], bool]:
        results = [(m, self.polynomial(alpha, beta, sign, m)) for m in ALL_METHODS[sign]]
        return results, len({str(p) for _, p in results}) == 1

    def table(self, N: int, K: int, sign: int, method: str, limit: Optional[int] = None) -> KLTable:
        limit = self.config.limit_for(method) if limit is None else limit
        if N > limit:
            raise SizeLimitError(f"method {method} is limited to N <= {limit}, got N={N}")
        if not 0 <= K <= N:
            raise InvalidInputError(f"need 0 <= K <= N, got N={N}, K={K}")
        return build_table(N, K, sign, method)

    def verify(self, suite: str, N: int, K: Optional[int]) -> VerificationReport:
        return Verifier(self.config).run(suite, N, K)

    def to_string(self, text: str, representation: str, sign: int, k: Optional[int]) -> BinaryString:
        """Read any representation of a coset as its binary string."""
        if representation == "string":
            return BinaryString.parse(text)
        if representation == "path":
            return path_to_string(PathNK.parse(text), sign)
        if k is None:
            raise InvalidInputError(f"reading a {representation} needs --k")
        if representation == "linkpattern":
            pattern = LinkPattern.from_json(_load_json(text))
            ups = k if sign == PLUS else pattern.N - k
            return path_to_string(path_from_link_pattern(pattern, pattern.N, ups), sign)
        if representation in ("grassmannian", "longest"):
            return string_from_permutation(parse_permutation(text), k)
        if representation == "tableau":
            return string_from_tableau(Tableau(tuple(tuple(r) for r in _load_json(text))), k)
        raise InvalidInputError(f"cannot read from representation {representation!r}")

    def from_string(self, s: BinaryString, representation: str, sign: int) -> str:
        if representation == "string":
            return str(s)
        path = string_to_path(s, sign)
        if representation == "path":
            return str(path)
        if representation == "linkpattern":
            return json.dumps(link_pattern(path).to_json(), separators=(",", ":"))
        if representation == "grassmannian":
            return format_permutation(grassmannian(s))
        if representation == "longest":
            return format_permutation(longest_representative(s))
        if representation == "tableau":
            return json.dumps(rs_first_tableau(grassmannian(s)).to_json(), separators=(",", ":"))
        if representation == "ferrers":
            return json.dumps(list(ferrers_diagram(path, sign)))
        raise InvalidInputError(f"unknown representation {representation!r}")

    def tree(self, alpha: PathNK, beta: PathNK) -> Tuple[CapTree, List[Labelling]]:
        """LS tree of P^+_{alpha,beta}: the region between beta (below) and alpha (above)."""
        tree = build_tree(beta, alpha)
        return tree, enumerate_labellings(tree)

    def configurations(self, alpha: PathNK, beta: PathNK, sign: int, rule: Optional[str]) -> List[StripConfig]:
        lower, upper = (alpha, beta) if sign == MINUS else (beta, alpha)
        if not dominates(lower, upper):
            raise InvalidInputError(f"{alpha} and {beta} are not comparable under sign {'+' if sign == PLUS else '-'}")
        return enumerate_configurations(lower, upper, rule)


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"invalid JSON input: {e}")


def _fail(message: str, code: int) -> None:
    click.echo(f"Error: {message}", err=True)
    sys.exit(code)


def _run(fn):
    """Call fn, turning library errors into the exit-code contract."""
    try:
        return fn()
    except MethodMismatchError as e:
        _fail(str(e), EXIT_FAILURE)
    except KLError as e:
        _fail(str(e), EXIT_USAGE)


sign_option = click.option('--sign', '-s', type=click.Choice(['+', '-']), default='+',
                           help='Order convention of the module')


@click.group()
@click.option('--config', '-c', type=str, help='Path to configuration file')
@click.option('--log-level', type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR'], case_sensitive=False),
              help='Logging level (default: from configuration)')
@click.pass_context
def main(ctx, config, log_level):
    """parabolic-kl - Kazhdan-Lusztig polynomials of maximal parabolic quotients of S_N."""
    cfg = _run(lambda: Config(config_file=config) if config else Config())
    set_log_level(log_level or cfg.log_level)
    ctx.obj = KLCalculator(config=cfg)


@main.command()
@sign_option
@click.option('--method', '-m', type=click.Choice(POLY_METHODS), default='hecke', help='Computation method')
@click.argument('alpha')
@click.argument('beta')
@click.pass_obj
def poly(calc: KLCalculator, sign, method, alpha, beta):
    """Print the polynomial of the pair ALPHA, BETA (paths like +-+- or strings like 1212)."""
    eps = parse_convention(sign)
    a = _run(lambda: parse_path_or_string(alpha, eps))
    b = _run(lambda: parse_path_or_string(beta, eps))
    if a.N == b.N and a.K == b.K and not path_leq(a, b, eps):
        click.echo(f"note: {a} is not below {b} in the {sign} order", err=True)
    if method == "all":
        results, match = _run(lambda: calc.compare_methods(a, b, eps))
        for name, p in results:
            click.echo(f"{name}: {p}")
        click.echo("MATCH" if match else "MISMATCH")
        if not match:
            sys.exit(EXIT_FAILURE)
        return
    click.echo(str(_run(lambda: calc.polynomial(a, b, eps, method))))


@main.command()
@sign_option
@click.option('--method', '-m', type=click.Choice(POLY_METHODS), default='hecke', help='Computation method')
@click.option('--format', '-f', 'fmt', type=click.Choice(FORMATS), default='tsv', help='Output format')
@click.option('--output', '-o', type=str, help='Save the table to this file')
@click.option('--limit', type=int, help='Override the size limit of the method')
@click.argument('n', type=int)
@click.argument('k', type=int)
@click.pass_obj
def table(calc: KLCalculator, sign, method, fmt, output, limit, n, k):
    """Print the full table over P(N,K)."""
    result = _run(lambda: calc.table(n, k, parse_convention(sign), method, limit))
    text = calc.reporter.render_table(result, fmt)
    if output:
        if not calc.reporter.save_report(text, output, format=fmt):
            _fail(f"could not write {output}", EXIT_USAGE)
        click.echo(f"Table saved to {output}")
    else:
        click.echo(text, nl=False)


@main.command()
@click.option('--json', 'as_json', is_flag=True, help='Print the machine-readable report')
@click.argument('suite', type=click.Choice(SUITES + ('all',)))
@click.argument('n', type=int)
@click.argument('k', type=int, required=False)
@click.pass_obj
def verify(calc: KLCalculator, as_json, suite, n, k):
    """Run a verification suite for N (and K, or every K)."""
    report = _run(lambda: calc.verify(suite, n, k))
    if as_json:
        click.echo(json.dumps(calc.reporter.generate_json_report([report]), indent=2))
    else:
        click.echo(calc.reporter.generate_text_report([report]))
    if not report.passed:
        sys.exit(EXIT_FAILURE)


@main.command()
@sign_option
@click.option('--from', 'source', type=click.Choice(REPRESENTATIONS[:-1]), default='string',
              help='Representation of INPUT')
@click.option('--to', 'target', type=click.Choice(REPRESENTATIONS), default='path', help='Representation to print')
@click.option('--k', type=int, help='Number of 1s in the coset, needed for permutations, tableaux and link patterns')
@click.argument('value')
@click.pass_obj
def biject(calc: KLCalculator, sign, source, target, k, value):
    """Convert VALUE between coset representations."""
    eps = parse_convention(sign)
    s = _run(lambda: calc.to_string(value, source, eps, k))
    click.echo(_run(lambda: calc.from_string(s, target, eps)))


@main.command()
@click.option('--json', 'as_json', is_flag=True, help='Print the tree as JSON')
@click.option('--labellings', is_flag=True, help='Draw the tree once per labelling')
@click.argument('alpha')
@click.argument('beta')
@click.pass_obj
def tree(calc: KLCalculator, as_json, labellings, alpha, beta):
    """Show the LS tree of P^+_{ALPHA,BETA}."""
    a = _run(lambda: parse_path_or_string(alpha, PLUS))
    b = _run(lambda: parse_path_or_string(beta, PLUS))
    cap_tree, labels = _run(lambda: calc.tree(a, b))
    if as_json:
        data: Dict[str, object] = {"tree": cap_tree.to_json()}
        if labellings:
            data["labellings"] = [lab.to_json() for lab in labels]
        click.echo(json.dumps(data, indent=2))
        return
    if not labellings:
        click.echo(calc.renderer.render_tree(cap_tree), nl=False)
        return
    for index, lab in enumerate(labels, 1):
        summary = ", ".join(f"({i},{j})={n}" for (i, j), n in lab.labels) or "(no edges)"
        click.echo(f"# {index}: {summary}")
        click.echo(calc.renderer.render_tree(cap_tree, lab), nl=False)


@main.command('config-render')
@sign_option
@click.option('--rule', '-r', type=click.Choice(['I', 'II', 'none']), default='I', help='Stacking rule')
@click.option('--json', 'as_json', is_flag=True, help='Print configurations as JSON')
@click.argument('alpha')
@click.argument('beta')
@click.pass_obj
def config_render(calc: KLCalculator, sign, rule, as_json, alpha, beta):
    """Draw every Dyck strip tiling for the pair ALPHA, BETA."""
    eps = parse_convention(sign)
    a = _run(lambda: parse_path_or_string(alpha, eps))
    b = _run(lambda: parse_path_or_string(beta, eps))
    configs = _run(lambda: calc.configurations(a, b, eps, None if rule == 'none' else rule))
    if as_json:
        click.echo(json.dumps([c.to_json() for c in configs], indent=2))
    else:
        click.echo(calc.renderer.render_configs(configs), nl=False)
        click.echo(f"{len(configs)} configurations")


if __name__ == '__main__':
    main()
