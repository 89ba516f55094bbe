use super::{CalculusError, Provenance, TangentSpace};
use crate::field::{Cyclotomic, Field, Rational, Subspace};
use crate::group::{character_table, CharacterTable, FiniteGroup};
use crate::hopf::{CalculusSide, HopfElement, HopfPair, Side};
use num_traits::{One, Zero};
use std::sync::Arc;

/// The calculus on C(G) attached to a nontrivial conjugacy class.
#[derive(Debug, Clone)]
pub struct ClassCalculus {
    pub class: usize,
    pub representative: usize,
    pub tangent: TangentSpace<Rational>,
}

#[derive(Debug, Clone)]
pub struct FunctionClassification {
    pub pair: HopfPair,
    pub calculi: Vec<ClassCalculus>,
    /// Whether the class tangent spaces add up to ker(counit) directly.
    pub direct_sum: bool,
}

/// One coirreducible calculus on C(G) per nontrivial conjugacy class, with
/// L spanned by x_g = g - e over the class.
pub fn classify_functions(group: &Arc<FiniteGroup>) -> Result<FunctionClassification, CalculusError> {
    let pair = HopfPair::new(group.clone());
    let cs = group.conjugacy_classes();
    let e = group.identity();
    let n = pair.dim();
    let mut calculi = Vec::new();
    let mut joined = Subspace::zero(n);
    let mut dim_sum = 0;
    for (class, members) in cs.classes.iter().enumerate() {
        if members.contains(&e) {
            continue;
        }
        let spanning = members
            .iter()
            .map(|&g| HopfElement::from_terms(Side::Group, [(g, Rational::one()), (e, -Rational::one())]))
            .collect();
        let representative = cs.representatives[class];
        let provenance = Provenance::ConjugacyClass { class, representative: group.name(representative) };
        let tangent = TangentSpace::from_spanning(&pair, CalculusSide::Functions, spanning, provenance)?;
        dim_sum += tangent.dim();
        joined = joined.join(tangent.subspace())?;
        calculi.push(ClassCalculus { class, representative, tangent });
    }
    let keps = Subspace::from_vectors(n, pair.keps_basis::<Rational>(Side::Group).iter().map(|x| x.to_dense(n)).collect())?;
    let direct_sum = dim_sum + 1 == n && joined == keps;
    Ok(FunctionClassification { pair, calculi, direct_sum })
}

/// A concrete lambda-hat in CG for a character and the tangent space it
/// produces.
#[derive(Debug, Clone)]
pub struct LambdaInstantiation {
    pub lambda_hat: HopfElement<Cyclotomic>,
    /// Generator of the cyclic subgroup and character index used, if the
    /// element came from the search.
    pub subgroup: Option<(usize, u64)>,
    pub rank: usize,
    pub coirreducible: bool,
    pub tangent: TangentSpace<Cyclotomic>,
}

#[derive(Debug, Clone)]
pub struct CharacterFamily {
    pub row: usize,
    pub degree: u32,
    pub instantiation: LambdaInstantiation,
}

#[derive(Debug, Clone)]
pub struct GroupAlgebraClassification {
    pub pair: HopfPair,
    pub table: CharacterTable,
    pub families: Vec<CharacterFamily>,
}

impl GroupAlgebraClassification {
    /// Sum of chi(e)^2 over nontrivial characters.
    pub fn block_dim_sum(&self) -> usize {
        self.families.iter().map(|f| (f.degree * f.degree) as usize).sum()
    }
}

/// One family per nontrivial irreducible character, each instantiated by
/// the lambda-hat search.
pub fn classify_group_algebra(group: &Arc<FiniteGroup>) -> Result<GroupAlgebraClassification, CalculusError> {
    classify_group_algebra_with(group, None)
}

/// As `classify_group_algebra`, but tries the given lambda-hat on every
/// character first. Rows that annihilate it fall back to the search, which
/// shows as `subgroup: Some(..)` on the instantiation.
pub fn classify_group_algebra_with(
    group: &Arc<FiniteGroup>,
    lambda_hat: Option<&HopfElement<Cyclotomic>>,
) -> Result<GroupAlgebraClassification, CalculusError> {
    let pair = HopfPair::new(group.clone());
    let table = character_table(group)?;
    let mut families = Vec::new();
    for row in 1..table.len() {
        let user = match lambda_hat {
            Some(l) => match tangent_from_lambda(&pair, &table, row, l) {
                Ok(tangent) => {
                    let rank = tangent.dim() / table.degrees[row] as usize;
                    Some(LambdaInstantiation { lambda_hat: l.clone(), subgroup: None, rank, coirreducible: rank == 1, tangent })
                }
                Err(CalculusError::EmptyTangent(_)) => None,
                Err(e) => return Err(e),
            },
            None => None,
        };
        let instantiation = match user {
            Some(i) => i,
            None => instantiate_lambda(&pair, &table, row)?,
        };
        families.push(CharacterFamily { row, degree: table.degrees[row], instantiation });
    }
    Ok(GroupAlgebraClassification { pair, table, families })
}

/// Cyclic subgroups <g> in element order, each listed once by its first
/// generator.
fn cyclic_subgroups(group: &FiniteGroup) -> Vec<(usize, Vec<usize>)> {
    let mut seen: Vec<Vec<usize>> = Vec::new();
    let mut out = Vec::new();
    for g in 0..group.order() {
        let o = group.element_order(g);
        let powers: Vec<usize> = (0..o).map(|l| group.power(g, l)).collect();
        let mut key = powers.clone();
        key.sort_unstable();
        if !seen.contains(&key) {
            seen.push(key);
            out.push((g, powers));
        }
    }
    out
}

/// Searches pairs (cyclic subgroup <g>, character phi_j(g^l) = zeta_o^{jl})
/// for multiplicity <chi|_<g>, phi_j> = 1 and returns
/// lambda-hat = sum_l phi_j(g^-l) g^l. Falls back to the smallest positive
/// multiplicity found, flagged as not coirreducible.
pub fn instantiate_lambda(pair: &HopfPair, table: &CharacterTable, row: usize) -> Result<LambdaInstantiation, CalculusError> {
    if row == 0 || row >= table.len() {
        return Err(CalculusError::BadCharacter(row));
    }
    let group = pair.group();
    let field = table.field();
    let m = u64::from(table.conductor);
    let mut best: Option<(Rational, usize, u64, HopfElement<Cyclotomic>)> = None;
    for (g, powers) in cyclic_subgroups(group) {
        let o = powers.len() as u64;
        let step = (m / o) as i64;
        for j in 0..o {
            let mut sum = Cyclotomic::zero();
            let mut lambda = HopfElement::zero(Side::Group);
            for (l, &h) in powers.iter().enumerate() {
                let root = field.zeta(-step * (j as i64) * (l as i64));
                sum = sum + table.value(group, row, h) * root.clone();
                lambda.add_term(h, root);
            }
            let mult = (sum / Cyclotomic::from_i64(o as i64)).as_rational().expect("multiplicities are rational");
            if mult.is_zero() {
                continue;
            }
            if mult.is_one() {
                let tangent = tangent_from_lambda(pair, table, row, &lambda)?;
                let rank = tangent.dim() / table.degrees[row] as usize;
                return Ok(LambdaInstantiation { lambda_hat: lambda, subgroup: Some((g, j)), rank, coirreducible: rank == 1, tangent });
            }
            if best.as_ref().is_none_or(|b| mult < b.0) {
                best = Some((mult, g, j, lambda));
            }
        }
    }
    let (_, g, j, lambda) = best.expect("the trivial subgroup always has positive multiplicity");
    let tangent = tangent_from_lambda(pair, table, row, &lambda)?;
    let rank = tangent.dim() / table.degrees[row] as usize;
    Ok(LambdaInstantiation { lambda_hat: lambda, subgroup: Some((g, j)), rank, coirreducible: rank == 1, tangent })
}

/// L = span{x_g = chi(g ( ) lambda) - chi(g lambda) 1 : g in G} in C(G).
pub fn tangent_from_lambda(
    pair: &HopfPair,
    table: &CharacterTable,
    row: usize,
    lambda_hat: &HopfElement<Cyclotomic>,
) -> Result<TangentSpace<Cyclotomic>, CalculusError> {
    if row >= table.len() {
        return Err(CalculusError::BadCharacter(row));
    }
    if lambda_hat.side() != Side::Group {
        return Err(CalculusError::SideMismatch);
    }
    if lambda_hat.is_zero() {
        return Err(CalculusError::ZeroLambda);
    }
    let group = pair.group();
    let n = pair.dim();
    // chi(g u lambda) as a function of the product gu.
    let chi_lambda: Vec<Cyclotomic> = (0..n)
        .map(|p| {
            lambda_hat
                .terms()
                .fold(Cyclotomic::zero(), |acc, (l, c)| acc + table.value(group, row, group.mul(p, l)) * c.clone())
        })
        .collect();
    let spanning = (0..n)
        .map(|g| {
            let base = chi_lambda[g].clone();
            HopfElement::from_terms(Side::Function, (0..n).map(|u| (u, chi_lambda[group.mul(g, u)].clone() - base.clone())))
        })
        .collect();
    let provenance = Provenance::CharacterFamily { row, lambda_hat: lambda_hat.clone() };
    let t = TangentSpace::from_spanning(pair, CalculusSide::GroupAlgebra, spanning, provenance)?;
    if t.dim() == 0 {
        return Err(CalculusError::EmptyTangent(format!("lambda-hat {} is annihilated by the character", pair.render(lambda_hat))));
    }
    Ok(t)
}
