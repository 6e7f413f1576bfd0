"""
Command-line interface: ``alcoves <command> [flags]``.

Output is JSON by default.  Exit status is 0 on success, 1 on a domain error
(bad datum, word, mask, ...) and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .cartan import AlcoveError, CartanDatum, SUPPORTED_TYPES, datum_from_json, datum_from_type
from .folded import (
    Orientation,
    classify_masks,
    enumerate_positively_folded,
    folded_image,
    is_positively_folded,
    point_count,
    r_polynomial,
    unfolded,
)
from .localization import (
    format_factored,
    gkm_check,
    localization_class,
    localize,
    specialize_delta_zero,
    to_alpha0_basis,
)
from .polynomial import format_expanded, parse_polynomial
from .render import GREEN, PURPLE, YELLOW, Scene, WalkLayer, render_svg
from .roots import affine_roots, is_positive, parse_root
from .walks import (
    Mask,
    concatenate,
    enumerate_masks,
    mask_product,
    random_equivalent_word,
    walk_from_word,
)
from .weyl import (
    WeylElement,
    bruhat_leq,
    elements_up_to_length,
    from_word,
    palindromic_word,
    parse_word,
    reduced_word,
)

# keys of --input-file JSON that map onto flags
_INPUT_KEYS = {
    "type": "type", "word": "word", "base": "base", "mask": "mask", "v": "v", "w": "w",
    "bound": "bound", "orientation": "orientation", "basis": "basis", "beta": "beta",
    "seed": "seed", "figure": "figure", "window": "window",
}


class UsageError(Exception):
    pass


def _word_text(value) -> str:
    if isinstance(value, (list, tuple)):
        return " ".join(str(int(i)) for i in value)
    return str(value)


def _load_input(args: argparse.Namespace) -> None:
    if not args.input_file:
        return
    try:
        obj = json.loads(Path(args.input_file).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise AlcoveError(f"cannot read input file: {exc}") from exc
    if not isinstance(obj, dict):
        raise AlcoveError("input file must hold a JSON object")
    args.input_obj = obj
    if "matrix" in obj and args.cartan_file is None and args.type is None:
        args.cartan_obj = obj
    for key, dest in _INPUT_KEYS.items():
        if key in obj and getattr(args, dest, None) is None:
            value = obj[key]
            if key in ("word", "base", "v", "w"):
                value = _word_text(value)
            elif key == "mask" and isinstance(value, list):
                value = "".join(str(int(b)) for b in value)
            setattr(args, dest, value)


def _datum(args: argparse.Namespace) -> CartanDatum:
    if args.cartan_file:
        try:
            obj = json.loads(Path(args.cartan_file).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise AlcoveError(f"cannot read Cartan file: {exc}") from exc
        return datum_from_json(obj)
    if getattr(args, "cartan_obj", None) is not None:
        return datum_from_json(args.cartan_obj)
    return datum_from_type(args.type or "A2~")


def _element(datum: CartanDatum, text: str | None, flag: str) -> WeylElement:
    if text is None:
        raise UsageError(f"{flag} is required")
    return from_word(datum, parse_word(text, datum))


def _target_word(datum: CartanDatum, args: argparse.Namespace) -> tuple[int, ...]:
    """--word if given (checked against --w when both are present), else reduced_word(--w)."""
    if args.word is not None:
        word = parse_word(args.word, datum)
        if args.w is not None and from_word(datum, word) != _element(datum, args.w, "--w"):
            raise AlcoveError("--word does not multiply to --w")
        return word
    return reduced_word(_element(datum, args.w, "--w"))


def _emit(args: argparse.Namespace, payload, text: str | None = None) -> None:
    if args.format == "text" and text is not None:
        body = text if text.endswith("\n") else text + "\n"
    elif args.format == "svg":
        body = payload if isinstance(payload, str) else json.dumps(payload) + "\n"
    else:
        body = json.dumps(payload) + "\n"
    if args.output:
        Path(args.output).write_text(body)
    else:
        sys.stdout.write(body)


def _format_poly(p, datum: CartanDatum, w: WeylElement | None, args: argparse.Namespace) -> str:
    if args.delta_zero:
        p = specialize_delta_zero(p)
    if args.basis == "alpha0":
        return format_expanded(to_alpha0_basis(p, datum))
    return format_factored(p, w)


# commands


def cmd_localize(args: argparse.Namespace) -> None:
    datum = _datum(args)
    v = _element(datum, args.v, "--v")
    w = _element(datum, args.w, "--w") if args.w is not None else from_word(datum, parse_word(args.word or "", datum))
    word = parse_word(args.word, datum) if args.word is not None else None
    if args.seed is not None and word is None:
        # a seeded non-reduced walk with two inserted s_i s_i pairs
        word = random_equivalent_word(w, 2, args.seed)
    p = localize(v, w, word)
    expected = getattr(args, "input_obj", {}).get("psi")
    if expected is not None and args.basis != "alpha0" and not args.delta_zero:
        if parse_polynomial(expected, p.names) != p:
            raise AlcoveError(f"input psi {expected!r} does not match the computed value")
    text = _format_poly(p, datum, w, args)
    _emit(args, {"psi": text}, text)


def cmd_class(args: argparse.Namespace) -> None:
    datum = _datum(args)
    v = _element(datum, args.v, "--v")
    bound = 3 if args.bound is None else int(args.bound)
    cls = localization_class(v, bound)
    rows = [
        {"w": list(reduced_word(w)), "psi": _format_poly(p, datum, w, args)}
        for w, p in cls.entries
    ]
    text = "\n".join(f"{' '.join(map(str, r['w'])) or 'e'}\t{r['psi']}" for r in rows)
    _emit(args, {"type": datum.label(), "v": list(reduced_word(v)), "bound": bound, "values": rows}, text)


def cmd_gkm(args: argparse.Namespace) -> None:
    datum = _datum(args)
    v = _element(datum, args.v, "--v")
    w = _element(datum, args.w, "--w")
    if args.beta is not None:
        betas = [parse_root(args.beta, datum)]
    else:
        level = 2 if args.bound is None else int(args.bound)
        betas = [b for b in affine_roots(datum, level) if is_positive(b)]
    failures = [str(b) for b in betas if not gkm_check(v, w, b)]
    payload = {"ok": not failures, "checked": len(betas), "failures": failures}
    _emit(args, payload, "ok" if not failures else "FAIL " + " ".join(failures))
    if failures:
        raise AlcoveError("GKM condition failed")


def cmd_masks(args: argparse.Namespace) -> None:
    datum = _datum(args)
    word = _target_word(datum, args)
    v = _element(datum, args.v, "--v")
    walk = walk_from_word(datum, word)
    masks = enumerate_masks(walk, v)
    roots = [s.crossing_root for s in walk.steps]
    products = [format_factored(mask_product(walk, m), candidates=roots) for m in masks]
    payload = {
        "type": datum.label(),
        "word": list(word),
        "v": list(reduced_word(v)),
        "masks": [str(m) for m in masks],
        "products": products,
    }
    _emit(args, payload, "\n".join(f"{m}\t{p}" for m, p in zip(payload["masks"], products)))


def cmd_walks(args: argparse.Namespace) -> None:
    datum = _datum(args)
    word = _target_word(datum, args)
    base = from_word(datum, parse_word(args.base or "", datum))
    walk = walk_from_word(datum, word, base)
    payload = walk.to_json()
    payload["end"] = list(reduced_word(walk.end))
    payload["steps"] = [
        {"panel": s.panel_type, "root": str(s.crossing_root), "forward": s.forward}
        for s in walk.steps
    ]
    text = "\n".join(
        f"{j + 1}\t{s.panel_type}\t{s.crossing_root}\t{'forward' if s.forward else 'backward'}"
        for j, s in enumerate(walk.steps)
    )
    _emit(args, payload, text)


def _orientation(args: argparse.Namespace) -> Orientation:
    try:
        return Orientation(args.orientation or "base")
    except ValueError as exc:
        raise UsageError(f"unknown orientation {args.orientation!r}") from exc


def cmd_fold(args: argparse.Namespace) -> None:
    datum = _datum(args)
    word = _target_word(datum, args)
    orientation = _orientation(args)
    if args.mask is None:
        if args.v is None:
            raise UsageError("--mask or --v is required")
        v = _element(datum, args.v, "--v")
        rows = [
            {
                "mask": str(c.mask),
                "folds": c.image.folds,
                "positively_folded": c.positive_base,
                "positive_trivial": c.positive_trivial,
            }
            for c in classify_masks(datum, word, v)
        ]
        text = "\n".join(f"{r['mask']}\t{r['positively_folded']}" for r in rows)
        _emit(args, {"type": datum.label(), "word": list(word), "v": list(reduced_word(v)), "masks": rows}, text)
        return
    fw = folded_image(walk_from_word(datum, word), Mask.parse(args.mask))
    payload = fw.to_json()
    payload["folds"] = fw.folds
    payload["positively_folded"] = is_positively_folded(fw, orientation)
    payload["orientation"] = orientation.value
    text = "\n".join(f"{j + 1}\t{s['kind']}\t{s['hyperplane']}" for j, s in enumerate(payload["steps"]))
    _emit(args, payload, text + f"\npositively folded: {payload['positively_folded']}")


def cmd_folded(args: argparse.Namespace) -> None:
    datum = _datum(args)
    word = _target_word(datum, args)
    v = _element(datum, args.v if args.v is not None else "", "--v")
    if args.action == "count":
        text = format_expanded(point_count(datum, word, v))
        _emit(args, text, text)
        return
    orientation = _orientation(args)
    walks = enumerate_positively_folded(datum, word, v, orientation)
    payload = {
        "type": datum.label(),
        "word": list(word),
        "v": list(reduced_word(v)),
        "orientation": orientation.value,
        "walks": [fw.to_json() for fw in walks],
    }
    _emit(args, payload, "\n".join("".join(map(str, fw.shown)) for fw in walks))


def cmd_count(args: argparse.Namespace) -> None:
    """Point counts for every v below w, with the oracle value alongside."""
    datum = _datum(args)
    word = _target_word(datum, args)
    w = from_word(datum, word)
    rows = []
    for v in elements_up_to_length(datum, w.length):
        if bruhat_leq(v, w):
            pc = point_count(datum, word, v)
            rows.append({
                "v": list(reduced_word(v)),
                "count": format_expanded(pc),
                "rpoly": format_expanded(r_polynomial(v, w)),
            })
    text = "\n".join(f"{' '.join(map(str, r['v'])) or 'e'}\t{r['count']}" for r in rows)
    _emit(args, {"type": datum.label(), "word": list(word), "counts": rows}, text)


def cmd_rpoly(args: argparse.Namespace) -> None:
    datum = _datum(args)
    v = _element(datum, args.v if args.v is not None else "", "--v")
    w = _element(datum, args.w, "--w")
    text = format_expanded(r_polynomial(v, w))
    _emit(args, text, text)


FIGURES = ("arrangement", "braid", "sbetaw", "fold1", "fold2", "class-s1", "class-s10")


def figure_scene(name: str, datum: CartanDatum, window: int = 2) -> Scene:
    """Scenes for the standard pictures; walk figures use the word 1 2 1 0."""
    word = (1, 2, 1, 0)
    if name == "arrangement":
        return Scene(datum, window, title=name)
    if name == "braid":
        return Scene(datum, window, (
            WalkLayer(unfolded(walk_from_word(datum, word)), GREEN),
            WalkLayer(unfolded(walk_from_word(datum, (2, 1, 2, 0))), YELLOW),
        ), title=name)
    if name == "sbetaw":
        beta = parse_root("-a1+2d", datum)
        pal = palindromic_word(datum, beta)
        first = walk_from_word(datum, pal)
        whole = concatenate(first, walk_from_word(datum, word))
        return Scene(datum, max(window, 3), (
            WalkLayer(unfolded(first), PURPLE),
            WalkLayer(unfolded(walk_from_word(datum, word)), GREEN),
            WalkLayer(unfolded(walk_from_word(datum, word, first.end)), GREEN),
        ), title=f"{name} {' '.join(map(str, whole.type_word))}")
    if name in ("fold1", "fold2"):
        mask = Mask((0, 0, 1, 1)) if name == "fold1" else Mask((1, 0, 0, 1))
        fw = folded_image(walk_from_word(datum, word), mask)
        return Scene(datum, window, (WalkLayer(fw, GREEN),), title=name)
    if name in ("class-s1", "class-s10"):
        v = from_word(datum, (1,) if name == "class-s1" else (1, 0))
        cls = localization_class(v, 4)
        labels = tuple((w, format_factored(p, w)) for w, p in cls.entries)
        return Scene(datum, max(window, 3), labels=labels, hyperplane_labels=False, title=name)
    raise UsageError(f"unknown figure {name!r}; choose from {', '.join(FIGURES)}")


def cmd_render(args: argparse.Namespace) -> None:
    datum = _datum(args)
    window = 2 if args.window is None else int(args.window)
    if args.figure is not None:
        scene = figure_scene(args.figure, datum, window)
    else:
        layers = []
        if args.word is not None or args.w is not None:
            word = _target_word(datum, args)
            walk = walk_from_word(datum, word)
            fw = folded_image(walk, Mask.parse(args.mask)) if args.mask else unfolded(walk)
            layers.append(WalkLayer(fw, GREEN))
        labels = ()
        if args.v is not None:
            v = _element(datum, args.v, "--v")
            bound = 3 if args.bound is None else int(args.bound)
            labels = tuple((w, format_factored(p, w)) for w, p in localization_class(v, bound).entries)
        scene = Scene(datum, window, tuple(layers), labels)
    svg = render_svg(scene)
    if args.output:
        Path(args.output).write_text(svg)
    else:
        sys.stdout.write(svg)


def cmd_selftest(args: argparse.Namespace) -> None:
    from .selftest import run

    ok = run(sys.stdout)
    if not ok:
        raise AlcoveError("selftest failed")


COMMANDS = {
    "localize": cmd_localize,
    "class": cmd_class,
    "gkm-check": cmd_gkm,
    "masks": cmd_masks,
    "walks": cmd_walks,
    "fold": cmd_fold,
    "folded": cmd_folded,
    "count": cmd_count,
    "rpoly": cmd_rpoly,
    "render": cmd_render,
    "selftest": cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", help=f"affine type label, e.g. A2~ ({', '.join(SUPPORTED_TYPES)})")
    common.add_argument("--cartan-file", help='JSON datum {"rank", "matrix", "theta"}')
    common.add_argument("--v", help='word for v, e.g. "1 0" ("" is the identity)')
    common.add_argument("--w", help="word for w")
    common.add_argument("--word", help="type word of the walk (need not be reduced for localize)")
    common.add_argument("--base", help="word for the base alcove of a walk")
    common.add_argument("--mask", help='mask bits, e.g. "1001"')
    common.add_argument("--beta", help='affine root, e.g. "-a1+2d"')
    common.add_argument("--bound", help="length bound or root level bound")
    common.add_argument("--orientation", choices=["base", "trivial"])
    common.add_argument("--basis", choices=["delta", "alpha0"], default="delta")
    common.add_argument("--delta-zero", action="store_true", help="specialize d to 0")
    common.add_argument("--format", choices=["json", "text", "svg"], default="json")
    common.add_argument("--output", help="write output to this path")
    common.add_argument("--seed", type=int, help="localize along a seeded non-reduced word")
    common.add_argument("--figure", help=f"render a standard figure ({', '.join(FIGURES)})")
    common.add_argument("--window", help="largest hyperplane level drawn")
    common.add_argument("--input-file", help="JSON object whose keys supply flag values")

    parser = argparse.ArgumentParser(prog="alcoves", description="Alcove walks and affine Schubert calculus.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        if name == "folded":
            p = sub.add_parser(name, parents=[common])
            p.add_argument("action", choices=["enumerate", "count"])
        else:
            sub.add_parser(name, parents=[common])
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _load_input(args)
        COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"alcoves: error: {exc}", file=sys.stderr)
        return 2
    except AlcoveError as exc:
        print(f"alcoves: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
