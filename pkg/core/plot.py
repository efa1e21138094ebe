import os
import logging
import numpy as np
import plotly.graph_objs as go
import plotly.offline as offline
from core.common import ensure_dir

logger = logging.getLogger(__name__)


class Plot:
    """
    Offline HTML plots: log-log sweeps with their fitted lines, and exponent regions
    """

    def __init__(self, out_dir):
        self.out_dir = out_dir

    def write(self, data, layout, file_name):
        ensure_dir(self.out_dir)
        path = os.path.join(self.out_dir, file_name)
        offline.plot({'data': data, 'layout': layout}, filename=path, auto_open=False, validate=False)
        logger.info('plot written to ' + path)
        return path

    def draw_fits(self, result):
        """
        One scatter of measured values and one fitted line per series
        """
        if not result.fits:
            logger.debug(result.name + ': nothing to plot')
            return None
        data = []
        for series, fit in result.fits.items():
            data.append(go.Scatter(x=list(fit.lambdas), y=list(fit.values), mode='markers', name=series))
            data.append(go.Scatter(x=list(fit.lambdas), y=list(fit.predict(fit.lambdas)), mode='lines',
                                   name=series + ' fit (slope ' + format(fit.slope, '.3f') + ')'))
        layout = go.Layout(
            title=dict(text=result.name, font=dict(size=14, color='#606060')),
            xaxis=dict(type='log', title='lambda'),
            yaxis=dict(type='log', title='norm'),
            autosize=True,
            showlegend=True,
        )
        return self.write(data, layout, result.name + '.html')

    def draw_region(self, region, file_name=None):
        axis = np.arange(region.k + 1) / float(region.k)
        trace = go.Heatmap(x=axis, y=axis, z=region.admissible.T.astype(int), colorscale='Greens', showscale=False)
        layout = go.Layout(
            title=region.checker + ' admissible region (' + str(region.count) + ' points)',
            xaxis=dict(title='1/' + region.axes[0]),
            yaxis=dict(title='1/' + region.axes[1]),
            autosize=True,
        )
        return self.write([trace], layout, file_name or region.checker + '-region.html')
