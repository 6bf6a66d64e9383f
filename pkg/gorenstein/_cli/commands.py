# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Commands available in session files
"""
import functools

from .._apolarity import (
    AlgebraMap,
    ArtinianAlgebra,
    GradedIdeal,
    OrientedAlgebra,
    annihilator,
    colon,
    dual_generator,
    quotient,
    thom_class,
)
from .._blowup import (
    BlowUpParameters,
    blowup_ideal,
    bumd_status,
    cohomological_blowup,
    construct_hat,
    dual_pair_from_cofactor,
    family_fiber,
    g_dual_polynomial,
    gorenstein_criterion,
    lambda_family_fiber,
)
from .._lefschetz import (
    generic_lefschetz,
    hilbert_combinatorics,
    jordan_type,
    lefschetz_status,
    symbolic_lefschetz_determinant,
)
from .._polys import Polynomial
from .._structure import (
    ToricFan,
    bug_obstruction,
    ci_classification,
    connected_sum,
    exact_zero_divisor_partner,
    is_compressed,
    maximal_hilbert,
    mingen_homology,
    minimal_nonfaces,
    toric_presentation,
    verify_blowdown_as_connected_sum,
    verify_blowup_as_connected_sum,
    watanabe_embed,
)
from ..constants import BLOWUP_VARIABLE
from .report import plain
from .session import Result

#: Command functions by name
COMMANDS = {}


class Arguments:
    """
    The ``key=value`` arguments of a command, converted on request

    Parameters
    ----------
    session : :class:`gorenstein._cli.session.Session`
    name : str
        The command.
    raw : dict
        Argument tokens by key.
    """

    def __init__(self, session, name, raw):
        self.session = session
        self.name = name
        self.raw = raw

    @property
    def field(self):
        "The session field."
        return self.session.field_spec

    def validate(self, required, optional):
        "Reject missing and unknown arguments."
        missing = [key for key in required if key not in self.raw]
        if missing:
            raise self.session.error(
                "Command '{}' needs the argument(s) {}.".format(
                    self.name, ", ".join(missing)
                )
            )
        unknown = sorted(set(self.raw) - set(required) - set(optional))
        if unknown:
            raise self.session.error(
                "Unknown argument(s) {} for '{}'. Accepted: {}.".format(
                    ", ".join(unknown),
                    self.name,
                    ", ".join(list(required) + list(optional)),
                )
            )

    def __contains__(self, key):
        return key in self.raw

    def reference(self, key):
        "The object bound to the argument."
        return self.session.resolve(self.raw[key])

    def algebra(self, key, oriented=False):
        "An algebra from an ideal, a dual form or an algebra."
        return self.session.algebra(self.reference(key), oriented=oriented)

    def ideal(self, key):
        "An ideal, or the annihilator of a dual form."
        value = self.reference(key)
        if isinstance(value, GradedIdeal):
            return value
        if isinstance(value, (ArtinianAlgebra, OrientedAlgebra)):
            return value.ideal
        if isinstance(value, Polynomial) and value.ring.dual:
            return annihilator(value)
        raise self.session.error(
            "Argument '{}' of '{}' must be an ideal.".format(key, self.name)
        )

    def polynomial(self, key, dual=False):
        "A bound polynomial of the primal side (or the dual side)."
        value = self.reference(key)
        if not isinstance(value, Polynomial) or value.ring.dual != dual:
            raise self.session.error(
                "Argument '{}' of '{}' must be a {}.".format(
                    key, self.name, "dual form" if dual else "polynomial"
                )
            )
        return value

    def polynomials(self, key, ring):
        "Comma separated polynomials, where ``0`` stands for zero."
        if key not in self.raw:
            return []
        values = []
        for token in self.raw[key].split(","):
            if token.strip() == "0":
                values.append(Polynomial.zero(ring))
                continue
            value = self.session.resolve(token.strip())
            if not isinstance(value, Polynomial):
                raise self.session.error("'{}' is not a polynomial.".format(token))
            values.append(value)
        return values

    def algebra_map(self, key):
        "A bound algebra map."
        value = self.reference(key)
        if not isinstance(value, AlgebraMap):
            raise self.session.error(
                "Argument '{}' of '{}' must be a map.".format(key, self.name)
            )
        return value

    def scalar(self, key, default=None):
        "A field element written as an integer or a fraction."
        if key not in self.raw:
            return None if default is None else self.field(default)
        try:
            return self.field(self.raw[key])
        except (ValueError, ZeroDivisionError):
            raise self.session.error(
                "Argument '{}' must be a number, not '{}'.".format(key, self.raw[key])
            ) from None

    def integer(self, key, default=None):
        "An integer argument."
        if key not in self.raw:
            return default
        try:
            return int(self.raw[key])
        except ValueError:
            raise self.session.error(
                "Argument '{}' must be an integer, not '{}'.".format(
                    key, self.raw[key]
                )
            ) from None

    def text(self, key, default=None, choices=None):
        "A bare word argument."
        value = self.raw.get(key, default)
        if choices is not None and value not in choices:
            raise self.session.error(
                "Argument '{}' must be one of {}, not '{}'.".format(
                    key, ", ".join(choices), value
                )
            )
        return value

    def names(self, key):
        "Comma separated names, or None."
        if key not in self.raw:
            return None
        return tuple(name.strip() for name in self.raw[key].split(","))

    def parameters(self, algebra_map):
        "Blow-up parameters from ``coefficients``, ``lam`` and ``variable``."
        source = algebra_map.source
        return BlowUpParameters(
            coefficients=tuple(self.polynomials("coefficients", source.ring)),
            lam=self.scalar("lam", 1),
            variable=self.text("variable", BLOWUP_VARIABLE),
        )


def command(name, required=(), optional=()):
    """
    Register a command under a name with its accepted arguments
    """

    def decorator(function):
        @functools.wraps(function)
        def wrapper(arguments):
            arguments.validate(required, optional)
            return function(arguments)

        COMMANDS[name] = wrapper
        return function

    return decorator


def _values(arguments, **values):
    return {key: plain(value, arguments.field) for key, value in values.items()}


def _ideal_values(ideal):
    return dict(
        ideal=ideal,
        hilbert=ideal.hilbert(),
        mu=ideal.mu,
        generator_degrees=ideal.generator_degrees(),
    )


def _socle(algebra):
    elements, degrees = [], []
    for degree, piece in sorted(algebra.socle().items()):
        elements.extend(piece)
        degrees.extend([degree] * len(piece))
    return elements, degrees


@command("annihilate", required=("form",))
def annihilate(arguments):
    "Annihilator ideal of a dual form."
    ideal = annihilator(arguments.polynomial("form", dual=True))
    return Result(
        _values(arguments, **_ideal_values(ideal)),
        dict(ideal=ideal, ring=ideal.ring),
    )


@command("dualgen", required=("algebra",))
def dualgen(arguments):
    "Macaulay dual generator of a Gorenstein algebra."
    algebra = arguments.algebra("algebra")
    form = dual_generator(algebra)
    return Result(
        _values(arguments, form=form, degree=form.degree), dict(form=form)
    )


@command("hilbert", required=("algebra",))
def hilbert(arguments):
    "Hilbert function of an algebra."
    algebra = arguments.algebra("algebra")
    values = algebra.hilbert
    return Result(
        _values(
            arguments,
            hilbert=values,
            top_degree=algebra.top_degree,
            dimension=sum(values),
            symmetric=tuple(values) == tuple(reversed(values)),
        ),
        dict(algebra=algebra, ideal=algebra.ideal, ring=algebra.ring),
    )


@command("socle", required=("algebra",))
def socle(arguments):
    "Socle of an algebra."
    algebra = arguments.algebra("algebra")
    elements, degrees = _socle(algebra)
    return Result(
        _values(
            arguments,
            socle=elements,
            socle_degrees=degrees,
            socle_dimension=len(elements),
            gorenstein=len(elements) == 1,
        ),
        dict(algebra=algebra),
    )


@command("colon", required=("ideal", "by"))
def colon_command(arguments):
    "Colon ideal by a polynomial or an ideal."
    value = arguments.reference("by")
    if not isinstance(value, (Polynomial, GradedIdeal)) or (
        isinstance(value, Polynomial) and value.ring.dual
    ):
        raise arguments.session.error("Argument 'by' must be a polynomial or ideal.")
    ideal = colon(arguments.ideal("ideal"), value)
    return Result(
        _values(arguments, **_ideal_values(ideal)), dict(ideal=ideal, ring=ideal.ring)
    )


@command("mingen", required=("ideal",))
def mingen(arguments):
    "Minimal generators of an ideal."
    ideal = arguments.ideal("ideal")
    return Result(
        _values(
            arguments,
            generators=ideal.minimal_generators(),
            mu=ideal.mu,
            generator_degrees=ideal.generator_degrees(),
        ),
        dict(ideal=ideal),
    )


@command("thom", required=("map",))
def thom(arguments):
    "Thom class of a map between oriented algebras."
    data = thom_class(arguments.algebra_map("map"))
    return Result(
        _values(
            arguments,
            thom=data.thom_class,
            euler=data.euler_class,
            restriction=data.is_restriction,
            degree=data.degree,
        ),
        dict(thom=data.thom_class, euler=data.euler_class),
    )


@command("blowup", required=("map",), optional=("coefficients", "lam", "variable"))
def blowup(arguments):
    "Cohomological blow-up along a surjective map."
    algebra_map = arguments.algebra_map("map")
    result = cohomological_blowup(algebra_map, arguments.parameters(algebra_map))
    tilde_A, tilde_T = result.tilde_A, result.tilde_T
    return Result(
        _values(
            arguments,
            polynomial=result.polynomial,
            thom=result.thom,
            ideal=tilde_A.ideal,
            hilbert=tilde_A.hilbert,
            mu=tilde_A.ideal.mu,
            dual=tilde_A.dual_generator,
            socle=tilde_A.socle_generator,
            exceptional=tilde_T.ideal,
            exceptional_hilbert=tilde_T.hilbert,
            tilde_thom=result.tilde_thom,
            lam=result.lam,
        ),
        dict(
            algebra=tilde_A,
            exceptional=tilde_T,
            ideal=tilde_A.ideal,
            ring=tilde_A.ring,
            form=tilde_A.dual_generator,
            polynomial=result.polynomial,
            beta=result.beta,
            beta0=result.beta0,
            pi_hat=result.pi_hat,
            result=result,
        ),
    )


@command("hat", required=("map", "poly"))
def hat(arguments):
    "Quotient along a map by any monic polynomial, with the Gorenstein criterion."
    algebra_map = arguments.algebra_map("map")
    polynomial = arguments.polynomial("poly")
    data = construct_hat(algebra_map, polynomial)
    report = gorenstein_criterion(algebra_map, polynomial)
    elements, degrees = _socle(data.algebra)
    return Result(
        _values(
            arguments,
            ideal=data.algebra.ideal,
            hilbert=data.algebra.hilbert,
            socle=elements,
            socle_degrees=degrees,
            socle_dimension=len(elements),
            gorenstein=report.gorenstein,
            beta_injective=report.beta_injective,
            lam=report.lam,
            exceptional_hilbert=data.exceptional.hilbert,
        ),
        dict(
            algebra=data.algebra,
            exceptional=data.exceptional,
            ideal=data.algebra.ideal,
            ring=data.algebra.ring,
        ),
    )


@command("blowup-ideal", required=("ideal", "thom", "poly"))
def blowup_ideal_command(arguments):
    "Blow-up ideal of a Gorenstein ideal along a colon."
    ideal = arguments.ideal("ideal")
    tau = arguments.polynomial("thom")
    blown = blowup_ideal(ideal, tau, arguments.polynomial("poly"))
    return Result(
        _values(
            arguments,
            colon=colon(ideal, tau),
            gorenstein=_is_gorenstein(blown),
            **_ideal_values(blown),
        ),
        dict(ideal=blown, ring=blown.ring),
    )


def _is_gorenstein(ideal):
    return quotient(ideal).is_gorenstein()


def _dual_arguments(arguments):
    return (
        arguments.polynomial("form", dual=True),
        arguments.polynomial("target", dual=True),
        arguments.polynomial("thom"),
        arguments.polynomial("poly"),
        arguments.scalar("lam", 1),
    )


@command("bumd", required=("form", "target", "thom", "poly"), optional=("lam",))
def bumd(arguments):
    "Blow-up of dual generators and the four conditions for it to be a blow-up."
    report = bumd_status(*_dual_arguments(arguments))
    dual = report.dual
    return Result(
        _values(
            arguments,
            form=dual.form,
            exceptional_form=dual.exceptional_form,
            cofactor=dual.dual.h,
            hilbert=dual.algebra.hilbert,
            conditions=report.conditions,
            is_blowup=report.is_blowup,
            correction=report.correction,
            constant_correction=report.constant_correction,
        ),
        dict(
            form=dual.form,
            algebra=dual.algebra,
            ideal=dual.algebra.ideal,
            ring=dual.algebra.ring,
        ),
    )


@command("gdual", required=("form",), optional=("poly", "cofactor", "degree"))
def gdual(arguments):
    "Dual polynomial of a monic polynomial with respect to a form."
    form = arguments.polynomial("form", dual=True)
    if ("poly" in arguments) == ("cofactor" in arguments):
        raise arguments.session.error("Give exactly one of 'poly' and 'cofactor'.")
    if "poly" in arguments:
        pair = g_dual_polynomial(arguments.polynomial("poly"), form)
    else:
        pair = dual_pair_from_cofactor(
            arguments.polynomial("cofactor"), form, arguments.integer("degree")
        )
    return Result(
        _values(
            arguments,
            poly=pair.f,
            cofactor=pair.h,
            unit=pair.unit,
            inverse=pair.inverse,
        ),
        dict(poly=pair.f, cofactor=pair.h),
    )


def _sum_values(arguments, data):
    fibered, total = data.hilbert_identities()
    return dict(
        ideal=data.connected_sum.ideal,
        hilbert=total,
        fibered_hilbert=fibered,
        common_hilbert=data.common_quotient.hilbert,
        common=data.common_quotient.ideal,
        thom=data.total_thom,
    )


@command(
    "consum",
    required=("form",),
    optional=("other", "sigma", "target", "thom", "poly", "lam"),
)
def consum(arguments):
    """
    Connected sum of two dual forms (``other``, ``sigma``), or a blow-up
    given by dual generators checked to be one
    """
    if "other" in arguments:
        arguments.validate(("form", "other", "sigma"), ())
        data = connected_sum(
            arguments.polynomial("form", dual=True),
            arguments.polynomial("other", dual=True),
            arguments.polynomial("sigma"),
        )
        values = _sum_values(arguments, data)
    else:
        arguments.validate(("form", "target", "thom", "poly"), ("lam",))
        report = verify_blowup_as_connected_sum(*_dual_arguments(arguments))
        data = report.data
        values = _sum_values(arguments, data)
        values.update(passed=report.passed, exceptional_thom=report.exceptional_thom)
    return Result(
        _values(arguments, **values),
        dict(algebra=data.connected_sum, ideal=data.connected_sum.ideal),
    )


@command(
    "blowdown-check", required=("map",), optional=("coefficients", "lam", "variable")
)
def blowdown_check(arguments):
    "Check that a blow-up splits as a connected sum over its exceptional divisor."
    algebra_map = arguments.algebra_map("map")
    result = cohomological_blowup(algebra_map, arguments.parameters(algebra_map))
    report = verify_blowdown_as_connected_sum(result)
    values = _sum_values(arguments, report.data)
    values.update(passed=report.passed)
    return Result(_values(arguments, **values), dict(ideal=values["ideal"]))


@command("mingen-homology", required=("ideal", "thom", "poly"))
def mingen_homology_command(arguments):
    "Minimal generators of a blow-up ideal from the homology of two maps."
    report = mingen_homology(
        arguments.ideal("ideal"),
        arguments.polynomial("thom"),
        arguments.polynomial("poly"),
    )
    return Result(
        _values(
            arguments,
            mu_I=report.mu_I,
            mu_colon=report.mu_colon,
            mu_tilde=report.mu_tilde,
            dim_H=report.dim_H,
            dim_H_prime=report.dim_H_prime,
            U=report.U,
            W=report.W,
        )
    )


@command("exact-zd", required=("algebra", "element"))
def exact_zd(arguments):
    "Partner of an exact pair of zero divisors."
    partner = exact_zero_divisor_partner(
        arguments.algebra("algebra"), arguments.polynomial("element")
    )
    return Result(
        _values(arguments, exact=partner is not None, partner=partner),
        dict(partner=partner),
    )


@command("ci", required=("ideal", "thom", "poly"))
def ci(arguments):
    "Complete intersection classification of a blow-up."
    report = ci_classification(
        arguments.ideal("ideal"),
        arguments.polynomial("thom"),
        arguments.polynomial("poly"),
    )
    return Result(
        _values(
            arguments,
            a_is_ci=report.a_is_ci,
            t_is_ci=report.t_is_ci,
            tau_exact_zd=report.tau_exact_zd,
            blowup_is_ci=report.blowup_is_ci,
            partner=report.partner,
            mu=report.mu,
        )
    )


@command("wbc-embed", required=("factors",))
def wbc_embed(arguments):
    "Embed a complete intersection into a complete intersection of quadrics."
    factored = arguments.reference("factors")
    if not isinstance(factored, list):
        raise arguments.session.error("Argument 'factors' must be a factored binding.")
    report = watanabe_embed(factored)
    return Result(
        _values(
            arguments,
            degrees=report.degrees,
            defect=report.defect,
            steps=[step.ideal for step in report.steps],
            variables=[step.variable for step in report.steps],
            ideal=report.algebra.ideal,
            hilbert=report.algebra.hilbert,
            socle_degree=report.algebra.top_degree,
            socle_image=report.socle_image,
            final_defect=report.final_defect,
        ),
        dict(
            algebra=report.algebra,
            ideal=report.algebra.ideal,
            ring=report.algebra.ring,
        ),
    )


@command("compressed", required=("algebra",))
def compressed(arguments):
    "Compressed test and the known obstruction to being a blow-up."
    algebra = arguments.algebra("algebra")
    return Result(
        _values(
            arguments,
            hilbert=algebra.hilbert,
            maximal=maximal_hilbert(algebra.embedding_dimension, algebra.top_degree),
            compressed=is_compressed(algebra),
            obstruction=bug_obstruction(algebra),
        )
    )


@command("toric", required=("fan",), optional=("names",))
def toric(arguments):
    "Cohomology ring of a complete simplicial toric variety."
    fan = arguments.reference("fan")
    if not isinstance(fan, ToricFan):
        raise arguments.session.error("Argument 'fan' must be a fan binding.")
    presentation = toric_presentation(fan, arguments.names("names"))
    return Result(
        _values(
            arguments,
            hilbert=presentation.hilbert,
            nonfaces=minimal_nonfaces(fan),
            ideal=presentation.ideal,
            reduced_ideal=presentation.reduced_ideal,
            validated=fan.validated,
        ),
        dict(
            algebra=presentation.reduced_algebra,
            ideal=presentation.reduced_ideal,
            ring=presentation.reduced_ring,
        ),
    )


@command("jordan", required=("algebra", "element"))
def jordan(arguments):
    "Jordan type of multiplication by a linear form."
    algebra = arguments.algebra("algebra")
    partition = jordan_type(algebra, arguments.polynomial("element"))
    combinatorics = hilbert_combinatorics(algebra.hilbert)
    return Result(
        _values(
            arguments,
            jordan=partition,
            parts=len(partition),
            conjugate=combinatorics.conjugate,
            sperner=combinatorics.sperner,
        )
    )


@command("lefschetz", required=("algebra", "element"))
def lefschetz(arguments):
    "Strong and weak Lefschetz properties of a linear form."
    verdict = lefschetz_status(
        arguments.algebra("algebra"), arguments.polynomial("element")
    )
    return Result(
        _values(
            arguments,
            slp=verdict.slp,
            wlp=verdict.wlp,
            jordan=verdict.jordan,
            failing_map=verdict.failing_map,
        )
    )


@command(
    "generic-lefschetz",
    required=("algebra",),
    optional=("strategy", "trials", "bound", "seed", "cap"),
)
def generic_lefschetz_command(arguments):
    "Lefschetz properties of a general linear form, by search."
    session = arguments.session
    seed = arguments.integer("seed", session.seed)
    strategy = arguments.text("strategy", "random", choices=("random", "exhaustive"))
    verdict = generic_lefschetz(
        arguments.algebra("algebra"),
        strategy=strategy,
        trials=arguments.integer("trials", session.trials),
        bound=arguments.integer("bound", session.bound),
        seed=seed,
        cap=arguments.integer("cap", session.cap),
    )
    return Result(
        _values(
            arguments,
            slp=verdict.slp,
            wlp=verdict.wlp,
            jordan=verdict.jordan,
            form=verdict.form,
            failing_map=verdict.failing_map,
            maximal_types=verdict.maximal_types,
            searched=verdict.searched,
            strategy=strategy,
            seed=seed,
        ),
        dict(form=verdict.form),
    )


@command("symdet", required=("algebra", "degree"), optional=("parameters",))
def symdet(arguments):
    "Determinant of multiplication by a symbolic linear form."
    algebra = arguments.algebra("algebra")
    degree = arguments.integer("degree")
    determinant = symbolic_lefschetz_determinant(
        algebra, degree, arguments.names("parameters")
    )
    return Result(
        _values(
            arguments,
            determinant=determinant,
            size=algebra.hilbert[degree],
            vanishes=not determinant,
        ),
        dict(determinant=determinant),
    )


@command(
    "fiber",
    required=("map", "value"),
    optional=("coefficients", "lam", "variable", "family"),
)
def fiber(arguments):
    """
    Fiber of the degeneration family at ``value``, or of the family in the
    scalar lambda with ``family=lambda``
    """
    algebra_map = arguments.algebra_map("map")
    family = arguments.text("family", "z", choices=("z", "lambda"))
    parameters = arguments.parameters(algebra_map)
    value = arguments.scalar("value")
    if family == "z":
        result = family_fiber(algebra_map, parameters, value)
    else:
        if "lam" in arguments:
            raise arguments.session.error(
                "With family=lambda the scalar is given by 'value'."
            )
        result = lambda_family_fiber(algebra_map, parameters.coefficients, value)
    elements, degrees = _socle(result.algebra)
    return Result(
        _values(
            arguments,
            polynomial=result.polynomial,
            ideal=result.algebra.ideal,
            hilbert=result.algebra.hilbert,
            socle_dimension=len(elements),
            socle_degrees=degrees,
            gorenstein=result.is_gorenstein,
        ),
        dict(
            algebra=result.algebra,
            ideal=result.algebra.ideal,
            ring=result.algebra.ring,
        ),
    )
