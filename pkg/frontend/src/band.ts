/** Feasibility band geometry: map money amounts onto a horizontal track
 * with the band [R_B, F_B] plus markers for the settlement offer, EVP and
 * logged offers. Pure layout math; all amounts come from the server. */

import type { OfferLogEntry, PricedQuote } from "./types.js";

export interface BandMarker {
  label: string;
  amount: number;
  /** position in [0, 1] along the track */
  position: number;
  inBand: boolean;
}

export interface BandLayout {
  trackMin: number;
  trackMax: number;
  bandStart: number;   // position of R_B in [0, 1]
  bandEnd: number;     // position of F_B in [0, 1]
  markers: BandMarker[];
}

const TRACK_PAD = 0.15; // fraction of band width shown either side

export function position(amount: number, trackMin: number, trackMax: number): number {
  if (trackMax <= trackMin) return 0.5;
  const raw = (amount - trackMin) / (trackMax - trackMin);
  return Math.min(1, Math.max(0, raw));
}

export function bandLayout(quote: PricedQuote, settlement: number,
                           offers: OfferLogEntry[]): BandLayout {
  const [rb, fb] = quote.feasible_band;
  const width = Math.max(fb - rb, 1e-9);
  const amounts = [settlement, quote.evp, ...offers.map((o) => o.offer)];
  const trackMin = Math.min(rb - TRACK_PAD * width, ...amounts);
  const trackMax = Math.max(fb + TRACK_PAD * width, ...amounts);

  const mark = (label: string, amount: number): BandMarker => ({
    label,
    amount,
    position: position(amount, trackMin, trackMax),
    inBand: amount >= rb && amount <= fb,
  });

  return {
    trackMin,
    trackMax,
    bandStart: position(rb, trackMin, trackMax),
    bandEnd: position(fb, trackMin, trackMax),
    markers: [
      mark("S_B", settlement),
      mark("EVP", quote.evp),
      ...offers.map((o) => mark(`offer ${o.classification}`, o.offer)),
    ],
  };
}
