#Copyright (C) 2026 The RansomNeg developers

#This program is free software; you can redistribute it and/or modify
#it under the terms of the GNU General Public License as published by
#the Free Software Foundation; either version 2 of the License, or
#(at your option) any later version.

#This program is distributed in the hope that it will be useful,
#but WITHOUT ANY WARRANTY; without even the implied warranty of
#MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
#GNU General Public License for more details.

#You should have received a copy of the GNU General Public License
#along with this program; if not, write to the Free Software Foundation,
#Inc., 59 Temple Place, Suite 330, Boston, MA 02111-1307 USA


import csv

from RansomNeg.Basic.Utilities import formatMoney
from RansomNeg.Game.Bargaining import closedFormOffers

"""
Text tables, CSV export and plots of computed results.
"""

scheduleColumns = ('round', 'proposer', 'offer', 'residual_value', 'reservation')

def scheduleRows(inst, N):
    """
    One row per round with the equilibrium offer next to the residual value
    and the victim's reservation value.

    :rtype: list
    """
    schedule = closedFormOffers(inst, N)
    rows = []
    for n in range(1, N + 1):
        rows.append({
            'round': n,
            'proposer': schedule.proposer(n),
            'offer': schedule.offer(n),
            'residual_value': inst.profile.residualValue(n),
            'reservation': inst.victim.reservation(n)
            })
    return rows

def formatSchedule(inst, N):
    """
    :rtype: string
    """
    lines = ["%-6s %-9s %-22s %-22s %s" % ('round', 'proposer', 'offer',
                                          'v(n)', 'psi(n)')]
    for row in scheduleRows(inst, N):
        lines.append("%-6i %-9s %-22s %-22s %s" % (
            row['round'], row['proposer'], formatMoney(row['offer']),
            formatMoney(row['residual_value']), formatMoney(row['reservation'])))
    return "\n".join(lines)

def scheduleCsv(inst, N, stream):
    """
    Writes the schedule as CSV, amounts as exact ``a/b`` strings.

    :param stream: Open text file
    """
    writer = csv.writer(stream)
    writer.writerow(scheduleColumns)
    for row in scheduleRows(inst, N):
        writer.writerow([str(row[c]) for c in scheduleColumns])

def timingTable(rows):
    """
    Median times in the layout k_theta, k, execution time.

    :param rows: Benchmark rows
    :type rows: list
    :rtype: string
    """
    lines = ["%-10s %-6s %s" % ('k_theta', 'k', 'Execution time'),
             "-" * 34]
    for row in rows:
        lines.append("%-10i %-6i %.2f ms" % (row.kTheta, row.k,
                                             1000 * row.median))
    return "\n".join(lines)

def plotTiming(rows, path):
    """
    Saves median time over k, one line per k_theta.
    """
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig = plt.figure(figsize=(8, 5))
    plt.title("Negotiation time over loopback")
    plt.grid(True)
    for kTheta in sorted(set(r.kTheta for r in rows)):
        line = sorted((r.k, 1000 * r.median) for r in rows if r.kTheta == kTheta)
        plt.plot([x for x, _ in line], [y for _, y in line], 'o-',
                 label="k_theta = %i" % kTheta)
    plt.xlabel("k")
    plt.ylabel("Median time [ms]")
    plt.legend(loc='upper left')
    fig.savefig(path)
    plt.close(fig)
