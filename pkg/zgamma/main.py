#!/usr/bin/env python3
"""
zgamma - Main Entry Point

Discrete conformal maps Z^gamma and Log as square grid circle patterns:
- generate maps and circle patterns at configurable precision
- iterate the Riccati, Painleve and dPII recursions
- validate patterns (kites, orientation, angles, embeddedness, sign condition)
- export to JSON, CSV and SVG

Usage:
    zgamma <command> [options]
    python -m zgamma.main <command> [options]
"""

import argparse
import json
import logging
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime
from pathlib import Path
from typing import List, Optional

from zgamma import __version__
from zgamma.config import (
    BRUTEFORCE_N_CAP,
    EXPORT_DIRECTORY,
    EXPORT_TIMESTAMP_FORMAT,
    Q_TOL,
    RICCATI_N_MAX,
    SEED_GRID,
)
from zgamma.errors import ConfigError, ZGammaError
from zgamma.export import (
    CSVWriter,
    JSONReader,
    JSONWriter,
    RunManifest,
    SVGOptions,
    SVGWriter,
    dpii_table,
    grid_table,
    painleve_table,
    radii_table,
    riccati_table,
)
from zgamma.geometry import (
    ValidationSummary,
    check_all,
    check_angles,
    check_embedded_bruteforce,
    check_kites,
    check_orientation,
    check_sign_condition,
)
from zgamma.lattice.precision import PrecisionContext
from zgamma.painleve import PainleveParams, dpii_trajectory, separatrix_bisect, trajectory
from zgamma.pattern import PatternConfig, PatternMode, dual_field, initial_radii, radii_evolution, z2_field
from zgamma.pattern.coordinator import PatternCoordinator, run_config
from zgamma.riccati import RiccatiParams, p0_closed, p0_hypergeometric, required_bits, riccati_iterate

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

logger = logging.getLogger(__name__)


def configure_logging(debug: bool = False, stream=None):
    """Route logs to stream (stdout unless a command streams data there)."""
    logging.basicConfig(
        level=logging.DEBUG if debug else logging.INFO,
        format=LOG_FORMAT,
        handlers=[logging.StreamHandler(stream or sys.stdout)],
        force=True,
    )
    if debug:
        logger.debug("Debug logging enabled")


def _add_params(parser: argparse.ArgumentParser, gamma: Optional[float] = 0.5):
    parser.add_argument('--gamma', type=float, default=gamma,
                        help=f'Exponent gamma (default: {gamma})')
    angle = parser.add_mutually_exclusive_group()
    angle.add_argument('--alpha', type=float, help='Intersection angle in radians')
    angle.add_argument('--alpha-pi', type=float, dest='alpha_pi',
                       help='Intersection angle as a multiple of pi (default: 0.5)')
    parser.add_argument('--bits', type=int, help='Mantissa bits (default: by grid size)')
    parser.add_argument('--out', type=str, help='Output file')


def _add_debug(parser: argparse.ArgumentParser):
    parser.add_argument('--debug', action='store_true',
                        help='Enable debug mode with verbose logging')


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command line arguments."""
    common = argparse.ArgumentParser(add_help=False)
    _add_debug(common)

    parser = argparse.ArgumentParser(
        prog='zgamma',
        description='Discrete conformal maps Z^gamma and Log as square grid circle patterns',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
    # Generate Z^(1/2) with alpha = pi/2 and validate it
    zgamma generate zgamma --gamma 0.5 --alpha-pi 0.5 --size 20 --bits 212 --out p.json

    # Re-run every check on a saved pattern
    zgamma check all p.json

    # Positive Riccati trajectory as CSV
    zgamma riccati --gamma 1 --alpha-pi 0.25 -n 100

    # Bracket the separatrix seed on the line N = 0
    zgamma painleve shoot --gamma 0.5 --alpha-pi 0.5 --mmax 30

    # Render a pattern
    zgamma export svg p.json --out p.svg --axes
        """
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('generate', parents=[common], help='Generate and validate a pattern')
    p.add_argument('mode', choices=[m.value for m in PatternMode])
    _add_params(p)
    p.add_argument('--kappa', type=float, default=1.0, help='Axis scale for kappa maps (default: 1)')
    p.add_argument('--size', type=int, default=20, help='Largest n+m (default: 20)')
    p.add_argument('--tol', type=float, help='Kite tolerance override')
    p.add_argument('--n-cap', type=int, default=BRUTEFORCE_N_CAP, dest='n_cap',
                   help=f'Largest n+m in the pairwise embeddedness test (default: {BRUTEFORCE_N_CAP})')
    p.add_argument('--no-validate', action='store_true', dest='no_validate',
                   help='Skip the geometric checks')

    p = sub.add_parser('radii', parents=[common], help='Radius field as CSV')
    p.add_argument('--mode', choices=['zgamma', 'z2', 'log'], default='zgamma')
    _add_params(p)
    p.add_argument('--mmax', type=int, default=10, help='Last row M (default: 10)')

    p = sub.add_parser('riccati', parents=[common], help='Riccati trajectory as CSV')
    _add_params(p)
    p.add_argument('-n', type=int, default=RICCATI_N_MAX, dest='n_max',
                   help=f'Last index (default: {RICCATI_N_MAX})')
    p.add_argument('--p0', choices=['closed', 'hypergeometric'], default='closed',
                   help='Initial value (default: closed)')
    p.add_argument('--delta', type=float, default=0.0, help='Perturbation added to p0')

    p = sub.add_parser('painleve', help='Painleve (P, Q) system')
    psub = p.add_subparsers(dest='action', required=True)
    p = psub.add_parser('shoot', parents=[common], help='Bracket the separatrix seed')
    _add_params(p)
    p.add_argument('--line', type=int, default=0, help='Line N (default: 0)')
    p.add_argument('--mmax', type=int, default=30, help='Last M checked (default: 30)')
    p.add_argument('--tol', type=float, default=Q_TOL, help=f'Bracket width (default: {Q_TOL})')
    p.add_argument('--seed-grid', type=int, default=SEED_GRID, dest='seed_grid',
                   help=f'Seeds per pass (default: {SEED_GRID})')
    p.add_argument('--trajectory', type=str, help='CSV of the orbit at the estimated seed')

    p = sub.add_parser('dpii', parents=[common], help='dPII trajectory as CSV')
    _add_params(p)
    p.add_argument('-n', type=int, default=50, dest='n_max', help='Last index (default: 50)')

    p = sub.add_parser('check', parents=[common], help='Validate a saved pattern')
    p.add_argument('check', choices=['kites', 'orient', 'angles', 'embed', 'sign', 'all'])
    p.add_argument('file', help='Pattern JSON')
    p.add_argument('--tol', type=float, help='Tolerance override (kites, angles)')
    p.add_argument('--n-cap', type=int, default=BRUTEFORCE_N_CAP, dest='n_cap')
    p.add_argument('--out', type=str, help='Report JSON (default: stdout)')

    p = sub.add_parser('export', parents=[common], help='Convert a saved pattern')
    p.add_argument('format', choices=['svg', 'json', 'csv'])
    p.add_argument('file', help='Pattern JSON')
    p.add_argument('--out', type=str, help='Output file (csv: default stdout)')
    p.add_argument('--table', choices=['grid', 'radii'], default='grid', help='CSV table')
    p.add_argument('--axes', action='store_true', help='Draw the coordinate axes')
    p.add_argument('--no-circles', action='store_true', dest='no_circles')
    p.add_argument('--no-mesh', action='store_true', dest='no_mesh')

    p = sub.add_parser('sweep', parents=[common], help='Generate and validate a parameter grid')
    p.add_argument('--gamma', type=float, nargs='+', default=[0.5, 1.5])
    p.add_argument('--alpha-pi', type=float, nargs='+', dest='alpha_pi', default=[0.5])
    p.add_argument('--size', type=int, default=20)
    p.add_argument('--bits', type=int)
    p.add_argument('--n-cap', type=int, default=BRUTEFORCE_N_CAP, dest='n_cap')
    p.add_argument('--workers', type=int, help='Worker processes (default: CPU count)')
    p.add_argument('--out', type=str, help='Summary JSON (default: stdout)')

    return parser.parse_args(argv)


def print_banner():
    """Print application banner."""
    logger.info(f"zgamma {__version__} - discrete Z^gamma circle patterns")


def _alpha(args) -> tuple:
    """(alpha in radians, alpha_pi or None); pi/2 when neither flag is given."""
    if args.alpha is not None:
        return args.alpha, None
    q = 0.5 if args.alpha_pi is None else args.alpha_pi
    return q * math.pi, q


def _ctx(args, size: int = 0) -> PrecisionContext:
    return PrecisionContext(args.bits) if args.bits else PrecisionContext.for_size(size)


def _default_path(stem: str, suffix: str) -> str:
    stamp = datetime.now().strftime(EXPORT_TIMESTAMP_FORMAT)
    return str(Path(EXPORT_DIRECTORY) / f"{stem}_{stamp}.{suffix}")


def _emit_json(data: dict, out: Optional[str]):
    text = json.dumps(data, indent=1)
    if out is None:
        print(text)
        return
    Path(out).parent.mkdir(parents=True, exist_ok=True)
    Path(out).write_text(text + '\n')
    logger.info(f"Wrote {out}")


def _streams_stdout(args) -> bool:
    """Commands that print data (not logs) to stdout when --out is absent."""
    if args.command in ('radii', 'riccati', 'painleve', 'dpii', 'check', 'sweep'):
        return args.out is None
    if args.command == 'export':
        return args.format == 'csv' and args.out is None
    return False


def cmd_generate(args) -> int:
    alpha, alpha_pi = _alpha(args)
    mode = PatternMode(args.mode)
    config = PatternConfig(
        gamma=2.0 if mode in (PatternMode.Z2, PatternMode.LOG) else args.gamma,
        alpha=alpha,
        alpha_pi=alpha_pi,
        size=args.size,
        mode=mode,
        kappa=args.kappa,
        precision=_ctx(args, args.size),
    )
    if args.tol is not None:
        config.kite_tol = args.tol

    coordinator = PatternCoordinator(config, validate=not args.no_validate, n_cap=args.n_cap)
    coordinator.on_progress(lambda p: logger.debug(f"Progress: {p.to_dict()}"))
    result = coordinator.generate()

    out = args.out or _default_path(mode.value, 'json')
    if not JSONWriter().write_result(result, out, command=f"generate {mode.value}"):
        return 1
    for name, value in sorted(result.residuals.items()):
        logger.info(f"  {name}: {value:.3e}")
    return 0 if result.passed else 1


def cmd_radii(args) -> int:
    alpha, alpha_pi = _alpha(args)
    ctx = _ctx(args, 2 * args.mmax)
    if args.mode == 'zgamma':
        config = PatternConfig(gamma=args.gamma, alpha=alpha, alpha_pi=alpha_pi,
                               size=2 * args.mmax, precision=ctx)
        R0, Ri = initial_radii(config)
        field = radii_evolution(R0, Ri, config, args.mmax)
    else:
        field = z2_field(alpha, args.mmax, ctx, alpha_pi=alpha_pi)
        if args.mode == 'log':
            field = dual_field(field)
        config = field.config

    manifest = RunManifest(command=f"radii {args.mode}", config=config.to_dict(), bits=ctx.mantissa_bits,
                           extra={'kind': field.kind, 'M_max': field.M_max})
    header, rows = radii_table(field)
    return 0 if CSVWriter().write(header, rows, args.out, manifest) else 1


def cmd_riccati(args) -> int:
    alpha, alpha_pi = _alpha(args)
    ctx = PrecisionContext(args.bits or required_bits(alpha, args.n_max))
    params = RiccatiParams(gamma=args.gamma, alpha=alpha, alpha_pi=alpha_pi)
    p0 = p0_hypergeometric(params, ctx) if args.p0 == 'hypergeometric' else p0_closed(params, ctx)
    traj = riccati_iterate(p0 + ctx.mpf(args.delta), params, args.n_max, ctx, stop_on_sign_loss=False)
    if traj.exit_index is not None:
        logger.warning(f"Positivity lost at n={traj.exit_index}")

    manifest = RunManifest(command='riccati', bits=ctx.mantissa_bits,
                           config={'gamma': args.gamma, 'alpha': alpha, 'alpha_pi': alpha_pi,
                                   'p0': args.p0, 'delta': args.delta, 'n_max': args.n_max},
                           extra={'status': traj.status.value, 'exit_index': traj.exit_index})
    header, rows = riccati_table(traj, ctx)
    return 0 if CSVWriter().write(header, rows, args.out, manifest) else 1


def cmd_painleve(args) -> int:
    alpha, alpha_pi = _alpha(args)
    ctx = PrecisionContext(args.bits or required_bits(alpha, args.mmax))
    params = PainleveParams(gamma=args.gamma, alpha=alpha, N=args.line, alpha_pi=alpha_pi)
    result = separatrix_bisect(params, args.mmax, q_tol=args.tol, ctx=ctx, seed_grid=args.seed_grid)

    manifest = RunManifest(command='painleve shoot', bits=ctx.mantissa_bits,
                           config={'gamma': args.gamma, 'alpha': alpha, 'alpha_pi': alpha_pi,
                                   'N': args.line, 'M_max': args.mmax, 'q_tol': args.tol})
    _emit_json({'manifest': manifest.to_dict(), 'result': result.to_dict()}, args.out)

    if args.trajectory:
        orbit = trajectory(params, result.q_estimate, args.mmax, ctx)
        header, rows = painleve_table(orbit, ctx)
        if not CSVWriter().write(header, rows, args.trajectory, manifest):
            return 1
    return 0 if result.converged else 1


def cmd_dpii(args) -> int:
    alpha, alpha_pi = _alpha(args)
    ctx = _ctx(args)
    a = ctx.mpf(alpha_pi) * ctx.pi if alpha_pi is not None else ctx.mpf(alpha)
    traj = dpii_trajectory(args.gamma, a, args.n_max, ctx)
    if not traj.in_sector(ctx):
        logger.warning("Trajectory leaves the sector (0, alpha)")

    manifest = RunManifest(command='dpii', bits=ctx.mantissa_bits,
                           config={'gamma': args.gamma, 'alpha': alpha, 'alpha_pi': alpha_pi,
                                   'n_max': args.n_max},
                           extra={'max_drift': float(max(traj.drift))})
    header, rows = dpii_table(traj, ctx)
    return 0 if CSVWriter().write(header, rows, args.out, manifest) else 1


def cmd_check(args) -> int:
    loaded = JSONReader().read(args.file)
    config = loaded.config
    grid, field, pattern = loaded.grid, loaded.field, loaded.pattern

    def need(what, value):
        if value is None:
            raise ConfigError(f"'{args.check}' needs a {what} in {args.file}")
        return value

    if args.check == 'all':
        summary = check_all(grid, field, pattern, n_cap=args.n_cap,
                            kite_tol=args.tol, angle_tol=args.tol)
    else:
        summary = ValidationSummary()
        if args.check == 'kites':
            summary.add(check_kites(need('map', grid), args.tol or config.kite_tol))
        elif args.check == 'orient':
            summary.add(check_orientation(need('map', grid)))
        elif args.check == 'angles':
            summary.add(check_angles(need('pattern', pattern), args.tol or config.angle_tol, config=config))
        elif args.check == 'embed':
            summary.add(check_embedded_bruteforce(need('map', grid), args.n_cap))
        elif args.check == 'sign':
            summary.add(check_sign_condition(need('radius field', field)))

    for report in summary.reports:
        logger.info(str(report))
    _emit_json(summary.to_dict(), args.out)
    return 0 if summary.passed else 1


def cmd_export(args) -> int:
    loaded = JSONReader().read(args.file)
    stem = Path(args.file).stem

    if args.format == 'svg':
        options = SVGOptions(circles=not args.no_circles, mesh=not args.no_mesh, axes=args.axes)
        ok = SVGWriter(options).write(args.out or _default_path(stem, 'svg'),
                                      loaded.grid, loaded.pattern, loaded.manifest)
    elif args.format == 'json':
        ok = JSONWriter().write(args.out or _default_path(stem, 'json'), loaded.manifest,
                                loaded.config, loaded.grid, loaded.field, loaded.pattern)
    else:
        if args.table == 'grid':
            if loaded.grid is None:
                raise ConfigError(f"{args.file} holds no map")
            header, rows = grid_table(loaded.grid)
        else:
            if loaded.field is None:
                raise ConfigError(f"{args.file} holds no radius field")
            header, rows = radii_table(loaded.field)
        ok = CSVWriter().write(header, rows, args.out, loaded.manifest)
    return 0 if ok else 1


def cmd_sweep(args) -> int:
    configs = []
    for gamma in args.gamma:
        for q in args.alpha_pi:
            configs.append(PatternConfig(gamma=gamma, alpha=q * math.pi, alpha_pi=q, size=args.size,
                                         precision=_ctx(args, args.size)))
    logger.info(f"Sweeping {len(configs)} configurations")

    with ProcessPoolExecutor(max_workers=args.workers) as pool:
        runs = list(pool.map(run_config, configs, [args.n_cap] * len(configs)))

    for run in runs:
        cfg = run['config']
        verdict = 'pass' if run['passed'] else run.get('error', 'fail')
        logger.info(f"  gamma={cfg['gamma']} alpha={cfg['alpha']:.6f}: {verdict}")
    _emit_json({'runs': runs, 'passed': all(r['passed'] for r in runs)}, args.out)
    return 0 if all(r['passed'] for r in runs) else 1


COMMANDS = {
    'generate': cmd_generate,
    'radii': cmd_radii,
    'riccati': cmd_riccati,
    'painleve': cmd_painleve,
    'dpii': cmd_dpii,
    'check': cmd_check,
    'export': cmd_export,
    'sweep': cmd_sweep,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    # Parse arguments
    args = parse_args(argv)

    configure_logging(args.debug, sys.stderr if _streams_stdout(args) else sys.stdout)
    if args.command in ('generate', 'sweep'):
        print_banner()

    try:
        return COMMANDS[args.command](args)

    except ConfigError as e:
        logger.error(f"Invalid parameters: {e}")
        return 2
    except ZGammaError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return 1
    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        return 1
    except Exception as e:
        logger.error(f"Unexpected error: {e}")
        if args.debug:
            import traceback
            traceback.print_exc()
        return 1


if __name__ == '__main__':
    sys.exit(main())
