from setuptools import setup

setup(
      name='regfilters',
      version='0.1',
      description='Regularized spectral graph convolution filters and a '
                  'numpy GCN.',
      url='',
      license='MIT',
      packages=['regfilters'],
      zip_safe=False,
      include_package_data=True,
      python_requires='>=3.8',
      install_requires=[
          'numpy>=1.20',
          'scipy>=1.7',
          'pandas>=1.5',
          'dill',
          'PyYAML',
      ],
      entry_points={
          'console_scripts': ['regfilters = regfilters.cli:main'],
      },
)
